# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Relation service - parallel paths and the generators of the relation ideal."""

import logging
from typing import Dict, Iterator, List, Optional, Tuple

from glg.constants import MAX_PATHS_PER_PAIR
from glg.errors import OperationError, PathLimitError
from glg.models.domain.free_polynomial import FreePolynomial
from glg.models.domain.path_poly import PathPoly
from glg.models.domain.ranked_digraph import RankedDigraph
from glg.models.domain.reachability import Reachability
from glg.models.domain.relation import RelationGenerator
from glg.services.path_polynomials import path_poly
from glg.services.reachability import reachability

logger = logging.getLogger(__name__)

Path = Tuple[str, ...]


def enumerate_paths(
    graph: RankedDigraph,
    source: str,
    target: str,
    limit: int = MAX_PATHS_PER_PAIR,
    reach: Optional[Reachability] = None,
) -> List[Path]:
    """
    Every directed path source -> target, in lexicographic order of edge names.

    Raises:
        PathLimitError: If there are more than ``limit`` paths
    """
    reach = reach or reachability(graph)
    count = reach.path_count(source, target) if source != target else 0
    if count > limit:
        raise PathLimitError(source, target, count, limit)

    paths: List[Path] = []

    def walk(vertex: str, prefix: List[str]) -> None:
        for edge in graph.out_edges(vertex):
            if edge.head == target:
                paths.append(tuple(prefix + [edge.name]))
            elif reach.reaches(edge.head, target):
                walk(edge.head, prefix + [edge.name])

    if source != target:
        walk(source, [])
    return paths


def _parallel_pairs(
    graph: RankedDigraph, reach: Reachability
) -> Iterator[Tuple[str, str]]:
    for source in graph.vertex_names:
        for target in reach.descendants(source):
            if reach.path_count(source, target) >= 2:
                yield source, target


def relation_records(
    graph: RankedDigraph,
    truncation: Optional[int] = None,
    path_limit: int = MAX_PATHS_PER_PAIR,
) -> List[RelationGenerator]:
    """
    Reference-path generators of the relation ideal.

    For each ordered pair (v, w) with at least two paths the lexicographically
    least path is the reference, and e(π_ref, j) - e(π, j) is emitted for every
    other path π and 1 <= j <= l(π). With ``truncation`` k only j < k is kept.
    """
    if truncation is not None and truncation < 1:
        raise OperationError(f"relation truncation must be at least 1, got {truncation}")

    reach = reachability(graph)
    records: List[RelationGenerator] = []
    for source, target in _parallel_pairs(graph, reach):
        paths = enumerate_paths(graph, source, target, path_limit, reach)
        reference = path_poly(graph, paths[0])
        for other in paths[1:]:
            records.extend(
                _differences(source, target, reference, path_poly(graph, other), truncation)
            )

    logger.info(f"{len(records)} relation generators (truncation={truncation})")
    return records


def _differences(
    source: str,
    target: str,
    first: PathPoly,
    second: PathPoly,
    truncation: Optional[int],
) -> Iterator[RelationGenerator]:
    for degree in range(1, first.length + 1):
        if truncation is not None and degree >= truncation:
            break
        difference = first.coefficient(degree) - second.coefficient(degree)
        if not difference.is_zero():
            yield RelationGenerator(
                source=source,
                target=target,
                reference_path=first.path,
                other_path=second.path,
                degree=degree,
                polynomial=difference,
            )


def relation_generators(
    graph: RankedDigraph,
    truncation: Optional[int] = None,
    path_limit: int = MAX_PATHS_PER_PAIR,
) -> List[FreePolynomial]:
    """Homogeneous generators of R (or R_k), see :func:`relation_records`."""
    return [record.polynomial for record in relation_records(graph, truncation, path_limit)]


def all_pairs_relation_generators(
    graph: RankedDigraph,
    truncation: Optional[int] = None,
    path_limit: int = MAX_PATHS_PER_PAIR,
) -> List[RelationGenerator]:
    """e(π1, j) - e(π2, j) for every unordered pair of distinct parallel paths."""
    reach = reachability(graph)
    records: List[RelationGenerator] = []
    for source, target in _parallel_pairs(graph, reach):
        polys = [
            path_poly(graph, path)
            for path in enumerate_paths(graph, source, target, path_limit, reach)
        ]
        for i, first in enumerate(polys):
            for second in polys[i + 1 :]:
                records.extend(_differences(source, target, first, second, truncation))
    return records


def relations_by_degree(
    records: List[RelationGenerator],
) -> Dict[int, List[FreePolynomial]]:
    """Group relation polynomials by graded degree."""
    grouped: Dict[int, List[FreePolynomial]] = {}
    for record in records:
        grouped.setdefault(record.degree, []).append(record.polynomial)
    return grouped
