# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Möbius service - μ on the path order and the polynomials M, M_lower, M_upper."""

import logging
from typing import Dict, Iterator, Optional, Tuple

from glg.models.domain.moebius_table import MoebiusTable
from glg.models.domain.ranked_digraph import RankedDigraph
from glg.models.domain.reachability import Reachability
from glg.models.domain.series import IntPolynomial
from glg.services.reachability import (
    reachability,
    unique_maximal_vertex,
    unique_minimal_vertex,
)

logger = logging.getLogger(__name__)

Chain = Tuple[str, ...]


def moebius_table(
    graph: RankedDigraph, reach: Optional[Reachability] = None
) -> MoebiusTable:
    """
    Möbius function of the path order.

    μ(v, v) = 1 and μ(v, w) = -Σ_{v >= u > w} μ(v, u). Lower vertices are
    filled in by decreasing rank so every u strictly between is already known.

    Args:
        graph: The graph
        reach: Precomputed reachability of ``graph``, if available

    Returns:
        Table over every comparable pair, diagonal included
    """
    reach = reach or reachability(graph)
    values: Dict[str, Dict[str, int]] = {}
    for upper in graph.vertex_names:
        row: Dict[str, int] = {upper: 1}
        below = sorted(reach.descendants(upper), key=lambda name: -graph.rank(name))
        for lower in below:
            row[lower] = -sum(
                value for u, value in row.items() if reach.reaches(u, lower)
            )
        values[upper] = row

    table = MoebiusTable(values=values)
    logger.debug(f"Möbius table over {table.pair_count()} comparable pairs")
    return table


def iter_chains_down(reach: Reachability, start: str) -> Iterator[Chain]:
    """Every chain start = v1 > v2 > ... > vl of the path order, l >= 1."""
    yield (start,)
    for lower in reach.descendants(start):
        for tail in iter_chains_down(reach, lower):
            yield (start,) + tail


def iter_chains_up(reach: Reachability, end: str) -> Iterator[Chain]:
    """Every chain v1 > ... > vl = end of the path order, written top first."""
    yield (end,)
    for upper in reach.ancestors(end):
        for head in iter_chains_up(reach, upper):
            yield head + (end,)


def iter_chains(reach: Reachability, upper: str, lower: str) -> Iterator[Chain]:
    """Every chain upper = v1 > ... > vl = lower."""
    if upper == lower:
        yield (upper,)
        return
    if not reach.reaches(upper, lower):
        return
    for middle in reach.descendants(upper):
        if middle == lower or reach.reaches(middle, lower):
            for tail in iter_chains(reach, middle, lower):
                yield (upper,) + tail


def chain_moebius(
    graph: RankedDigraph, upper: str, lower: str, reach: Optional[Reachability] = None
) -> int:
    """μ(upper, lower) as the alternating sum Σ (-1)^(l+1) over chains."""
    reach = reach or reachability(graph)
    return sum((-1) ** (len(chain) + 1) for chain in iter_chains(reach, upper, lower))


def moebius_polynomial(
    graph: RankedDigraph, table: Optional[MoebiusTable] = None
) -> IntPolynomial:
    """
    Σ μ(v, w) z^(|v| - |w|) over all comparable pairs v >= w.

    No extremal-vertex precondition; see :func:`m_series` for the checked form.
    """
    table = table or moebius_table(graph)
    terms: Dict[int, int] = {}
    for upper, lower, value in table.pairs():
        gap = graph.rank(upper) - graph.rank(lower)
        terms[gap] = terms.get(gap, 0) + value
    return IntPolynomial.from_terms(terms)


def m_series(graph: RankedDigraph, table: Optional[MoebiusTable] = None) -> IntPolynomial:
    """
    M(Γ)(z), diagonal pairs included.

    Raises:
        ExtremalVertexError: If the graph has no unique minimal vertex
    """
    unique_minimal_vertex(graph)
    return moebius_polynomial(graph, table)


def m_lower(graph: RankedDigraph, table: Optional[MoebiusTable] = None) -> IntPolynomial:
    """Σ_v μ(v, v_min) z^(|v| - |v_min|) for the unique minimal vertex v_min."""
    bottom = unique_minimal_vertex(graph)
    table = table or moebius_table(graph)
    terms: Dict[int, int] = {}
    for vertex in graph.vertex_names:
        gap = graph.rank(vertex) - graph.rank(bottom)
        terms[gap] = terms.get(gap, 0) + table.mu(vertex, bottom)
    return IntPolynomial.from_terms(terms)


def m_upper(graph: RankedDigraph, table: Optional[MoebiusTable] = None) -> IntPolynomial:
    """Σ_v μ(v_max, v) z^(|v_max| - |v|) for the unique maximal vertex v_max."""
    top = unique_maximal_vertex(graph)
    table = table or moebius_table(graph)
    terms: Dict[int, int] = {}
    for vertex in graph.vertex_names:
        gap = graph.rank(top) - graph.rank(vertex)
        terms[gap] = terms.get(gap, 0) + table.mu(top, vertex)
    return IntPolynomial.from_terms(terms)
