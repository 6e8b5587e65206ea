# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Hilbert series service - closed forms for the Hilbert series of A(Γ)."""

import logging
from typing import Dict, Iterable, List, Optional

import networkx as nx

from glg.errors import GraphValidationError, SeriesError
from glg.models.domain.moebius_table import MoebiusTable
from glg.models.domain.ranked_digraph import RankedDigraph
from glg.models.domain.series import (
    ONE_MINUS_Z,
    HilbertSeries,
    IntPolynomial,
    RationalSeries,
)
from glg.services.moebius import iter_chains_down, m_series
from glg.services.reachability import (
    reachability,
    require_ground_sink,
    unique_minimal_vertex,
)

logger = logging.getLogger(__name__)


def filtration_degree(rank: int, index: int) -> int:
    """f(a, j) = j*a - j(j-1)/2, the filtered degree of a_j(e) with |e| = a."""
    if index < 0:
        raise SeriesError(f"filtration index must be nonnegative, got {index}")
    return index * rank - index * (index - 1) // 2


def hilbert_series(
    graph: RankedDigraph,
    order: int,
    reduce: bool = False,
    table: Optional[MoebiusTable] = None,
) -> HilbertSeries:
    """
    h(z) = (1 - z) / (1 - z·M(Γ)(z)) and its expansion to z^order.

    The rational form is returned unreduced unless ``reduce`` is set, in
    which case common factors (1 - z) are cancelled; the expansion is the
    same either way.

    Raises:
        ExtremalVertexError: No unique minimal vertex
        GraphValidationError: The minimal vertex is not at rank 0
    """
    require_ground_sink(graph)
    moebius = m_series(graph, table)
    rational = RationalSeries(ONE_MINUS_Z, IntPolynomial.one() - moebius.shift(1))
    if reduce:
        rational = rational.reduced()
    expansion = rational.expand(order)
    logger.info(f"Hilbert series to order {order}: {expansion.to_list()}")
    return HilbertSeries(rational, expansion)


def conjugate_partition(lengths: Iterable[int]) -> List[int]:
    """[m_1, ..., m_r] with m_j the number of lengths >= j."""
    counts: Dict[int, int] = {}
    for length in lengths:
        counts[length] = counts.get(length, 0) + 1
    longest = max(counts, default=0)
    result: List[int] = []
    running = 0
    for j in range(longest, 0, -1):
        running += counts.get(j, 0)
        result.append(running)
    return result[::-1]


def is_rooted_tree(graph: RankedDigraph) -> bool:
    """Underlying undirected multigraph is a tree and there is exactly one sink."""
    if not graph.vertices or len(graph.sinks()) != 1:
        return False
    return nx.is_tree(graph.to_networkx())


def hilbert_tree(graph: RankedDigraph) -> RationalSeries:
    """
    1 / (1 - Σ_j m_j z^j) for a rooted tree, m_j = #{edges of length >= j}.

    Raises:
        GraphValidationError: If the graph is not a rooted tree
    """
    unique_minimal_vertex(graph)
    if not is_rooted_tree(graph):
        raise GraphValidationError(
            "graph is not a rooted tree (its undirected multigraph has a cycle "
            "or is disconnected)"
        )
    partition = conjugate_partition(graph.edge_lengths().values())
    denominator = IntPolynomial.one() - IntPolynomial((0, *partition))
    return RationalSeries(IntPolynomial.one(), denominator)


def hilbert_series_from_chains(graph: RankedDigraph, order: int) -> HilbertSeries:
    """
    Hilbert series from the chain-sum denominator

        1 - z + Σ (-1)^l (z^(|v1| - |vl| + 1) - z^(|v1| + 1))

    over chains v1 > ... > vl of vertices strictly above the minimal vertex.
    Enumerates chains explicitly, so it is meant for small graphs.
    """
    bottom = require_ground_sink(graph)
    reach = reachability(graph)

    terms: Dict[int, int] = {0: 1, 1: -1}
    for start in graph.vertex_names:
        if start == bottom:
            continue
        for chain in iter_chains_down(reach, start):
            if chain[-1] == bottom:
                continue
            sign = -1 if len(chain) % 2 else 1
            top, last = graph.rank(chain[0]), graph.rank(chain[-1])
            terms[top - last + 1] = terms.get(top - last + 1, 0) + sign
            terms[top + 1] = terms.get(top + 1, 0) - sign

    rational = RationalSeries(ONE_MINUS_Z, IntPolynomial.from_terms(terms))
    return HilbertSeries(rational, rational.expand(order))
