# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Fluent builder for RankedDigraph test objects."""

from typing import Dict, List, Optional, Tuple

from glg.models.domain.ranked_digraph import RankedDigraph


class RankedDigraphBuilder:
    """
    Fluent builder for creating RankedDigraph test objects.

    Usage:
        graph = (a_graph()
                 .with_vertex("a", 1)
                 .with_vertex("s", 0)
                 .with_edge("a", "s")
                 .build())
    """

    def __init__(self) -> None:
        self._vertices: Dict[str, int] = {}
        self._edges: List[Tuple[str, str, str]] = []

    def with_vertex(self, name: str, rank: int) -> "RankedDigraphBuilder":
        """Add a vertex."""
        self._vertices[name] = rank
        return self

    def with_vertices(self, **ranks: int) -> "RankedDigraphBuilder":
        """Add several vertices given as name=rank."""
        self._vertices.update(ranks)
        return self

    def with_edge(
        self, tail: str, head: str, name: Optional[str] = None
    ) -> "RankedDigraphBuilder":
        """Add an edge; unnamed edges are called e1, e2, ... in order."""
        self._edges.append((name or f"e{len(self._edges) + 1}", tail, head))
        return self

    def with_path(self, *vertices: str) -> "RankedDigraphBuilder":
        """Add edges between consecutive vertices."""
        for tail, head in zip(vertices, vertices[1:]):
            self.with_edge(tail, head)
        return self

    def build(self) -> RankedDigraph:
        """Build the RankedDigraph instance."""
        return RankedDigraph.from_records(self._vertices.items(), self._edges)


def a_graph() -> RankedDigraphBuilder:
    """Entry point for creating RankedDigraph builders."""
    return RankedDigraphBuilder()


def a_single_edge(length: int = 1) -> RankedDigraphBuilder:
    """Pre-configured builder for u -> v with the given length."""
    return a_graph().with_vertex("u", length).with_vertex("v", 0).with_edge("u", "v")


def an_orbit_graph() -> RankedDigraphBuilder:
    """The four-vertex orbit graph a(3), b(2), c(1), *(0)."""
    return (
        a_graph()
        .with_vertices(a=3, b=2, c=1)
        .with_vertex("*", 0)
        .with_edge("a", "b", "e1")
        .with_edge("a", "c", "e2")
        .with_edge("b", "*", "e3")
        .with_edge("c", "*", "e4")
    )


def parallel_edges(count: int = 2, length: int = 1) -> RankedDigraphBuilder:
    """``count`` parallel edges v -> w of the given length."""
    builder = a_graph().with_vertex("v", length).with_vertex("w", 0)
    for index in range(1, count + 1):
        builder.with_edge("v", "w", f"p{index}")
    return builder
