# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Ranking service - canonical ranks and the countable family of rank functions."""

import logging
from typing import Dict, List, Tuple, Union

import networkx as nx

from glg.errors import CycleError, RankingError
from glg.models.domain.ranked_digraph import DagSkeleton, RankedDigraph
from glg.models.domain.ranking import RankFunction, RankingComparison

logger = logging.getLogger(__name__)

GraphLike = Union[RankedDigraph, DagSkeleton]


def _skeleton(graph: GraphLike) -> DagSkeleton:
    return graph.skeleton() if isinstance(graph, RankedDigraph) else graph


def topological_order(graph: GraphLike) -> List[str]:
    """
    Deterministic topological order, tails before heads.

    Raises:
        CycleError: If the underlying directed graph has a cycle
    """
    nx_graph = _skeleton(graph).to_networkx()
    try:
        return list(nx.lexicographical_topological_sort(nx_graph))
    except nx.NetworkXUnfeasible:
        cycle = nx.find_cycle(nx_graph)
        names = [step[0] for step in cycle]
        raise CycleError(names + [names[0]]) from None


def _successors(skeleton: DagSkeleton) -> Dict[str, List[str]]:
    successors: Dict[str, List[str]] = {name: [] for name in skeleton.vertices}
    for edge in skeleton.edges:
        successors[edge.tail].append(edge.head)
    return successors


def canonical_rank(graph: GraphLike) -> RankFunction:
    """
    The pointwise-minimal rank function: 0 on sinks, otherwise the largest
    number of edges on a directed path starting at the vertex.

    Given ranks (if any) are ignored.
    """
    skeleton = _skeleton(graph)
    order = topological_order(skeleton)
    successors = _successors(skeleton)

    ranks: Dict[str, int] = {}
    for vertex in reversed(order):
        ranks[vertex] = 1 + max((ranks[h] for h in successors[vertex]), default=-1)
    return {name: ranks[name] for name in skeleton.vertices}


def apply_ranking(graph: GraphLike, ranks: RankFunction) -> RankedDigraph:
    """Attach a rank function to a skeleton, validating it."""
    skeleton = _skeleton(graph)
    _check_ranking(skeleton, ranks)
    return RankedDigraph(
        vertices={name: ranks[name] for name in skeleton.vertices},
        edges=skeleton.edges,
    )


def enumerate_rank_functions(graph: GraphLike, bound: int) -> List[RankFunction]:
    """
    Every rank function with all ranks <= ``bound``.

    Backtracks over a topological order (heads are fixed before their tails,
    so every partial assignment extends) and returns the functions in
    lexicographic order of the rank vector in stored vertex order.
    """
    if bound < 0:
        raise RankingError(f"rank bound must be nonnegative, got {bound}")

    skeleton = _skeleton(graph)
    order = topological_order(skeleton)
    successors = _successors(skeleton)

    assignment: Dict[str, int] = {}
    found: List[Tuple[int, ...]] = []

    def backtrack(position: int) -> None:
        if position < 0:
            found.append(tuple(assignment[name] for name in skeleton.vertices))
            return
        vertex = order[position]
        lowest = 1 + max((assignment[h] for h in successors[vertex]), default=-1)
        for value in range(lowest, bound + 1):
            assignment[vertex] = value
            backtrack(position - 1)
        assignment.pop(vertex, None)

    backtrack(len(order) - 1)

    if not found:
        canonical_max = max(canonical_rank(skeleton).values(), default=0)
        logger.warning(
            f"Rank bound {bound} is below the canonical maximum {canonical_max}; "
            "no rank functions exist"
        )
    found.sort()
    return [dict(zip(skeleton.vertices, vector)) for vector in found]


def _check_ranking(skeleton: DagSkeleton, ranks: RankFunction) -> None:
    if set(ranks) != set(skeleton.vertices):
        missing = sorted(set(skeleton.vertices) - set(ranks))
        extra = sorted(set(ranks) - set(skeleton.vertices))
        raise RankingError(
            f"ranking does not match the graph (missing: {missing}, unknown: {extra})"
        )
    for name, value in ranks.items():
        if value < 0:
            raise RankingError(f"vertex {name!r} has negative rank {value}")
    for edge in skeleton.edges:
        if ranks[edge.tail] <= ranks[edge.head]:
            raise RankingError(
                f"edge {edge.name!r} is not rank-decreasing under the ranking"
            )


def compare_rankings(
    graph: GraphLike, first: RankFunction, second: RankFunction
) -> RankingComparison:
    """
    Compare two rankings of the same graph by the ranks of the edge tails
    (|e| = |t(e)| for every edge e).
    """
    skeleton = _skeleton(graph)
    _check_ranking(skeleton, first)
    _check_ranking(skeleton, second)

    pairs = [(first[edge.tail], second[edge.tail]) for edge in skeleton.edges]
    greater_or_equal = all(a >= b for a, b in pairs)
    less_or_equal = all(a <= b for a, b in pairs)
    if greater_or_equal and less_or_equal:
        return RankingComparison.EQUAL
    if greater_or_equal:
        return RankingComparison.GE
    if less_or_equal:
        return RankingComparison.LE
    return RankingComparison.INCOMPARABLE
