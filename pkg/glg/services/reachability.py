# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Reachability service - path order, path counts and extremal vertices."""

import logging
from typing import Dict

from glg.errors import ExtremalVertexError, GraphValidationError
from glg.models.domain.ranked_digraph import RankedDigraph
from glg.models.domain.reachability import Reachability

logger = logging.getLogger(__name__)


def reachability(graph: RankedDigraph) -> Reachability:
    """
    Transitive closure of the edge relation with directed path counts.

    Vertices are visited by increasing rank, so every head is finished
    before its tails and count(v, w) = sum over out-edges e of v of
    count(h(e), w), with count(v, v) = 1.
    """
    counts: Dict[str, Dict[str, int]] = {}
    for vertex in sorted(graph.vertex_names, key=graph.rank):
        below: Dict[str, int] = {}
        for edge in graph.out_edges(vertex):
            head = edge.head
            below[head] = below.get(head, 0) + 1
            for target, count in counts[head].items():
                below[target] = below.get(target, 0) + count
        counts[vertex] = below

    ordered = {name: counts[name] for name in graph.vertex_names}
    return Reachability(vertex_order=list(graph.vertex_names), path_counts=ordered)


def unique_minimal_vertex(graph: RankedDigraph) -> str:
    """
    The unique sink of the graph.

    Raises:
        ExtremalVertexError: Naming every sink when there is not exactly one
    """
    sinks = graph.sinks()
    if len(sinks) != 1:
        raise ExtremalVertexError("minimal", sinks)
    return sinks[0]


def unique_maximal_vertex(graph: RankedDigraph) -> str:
    """
    The unique source of the graph.

    Raises:
        ExtremalVertexError: Naming every source when there is not exactly one
    """
    sources = graph.sources()
    if len(sources) != 1:
        raise ExtremalVertexError("maximal", sources)
    return sources[0]


def has_ground_sink(graph: RankedDigraph) -> bool:
    """True when the graph has a unique sink and it sits at rank 0."""
    sinks = graph.sinks()
    return len(sinks) == 1 and graph.rank(sinks[0]) == 0


def require_ground_sink(graph: RankedDigraph) -> str:
    """
    The unique minimal vertex, which must have rank 0.

    Graphs whose sink sits above rank 0 are refused rather than shifted.

    Raises:
        ExtremalVertexError: No unique minimal vertex
        GraphValidationError: The minimal vertex has positive rank
    """
    sink = unique_minimal_vertex(graph)
    if graph.rank(sink) != 0:
        raise GraphValidationError(
            f"minimal vertex {sink!r} has rank {graph.rank(sink)}, expected 0 "
            "(re-rank the graph; it is never shifted implicitly)"
        )
    return sink
