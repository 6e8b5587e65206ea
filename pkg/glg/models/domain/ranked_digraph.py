# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""RankedDigraph model - a generalized layered graph.

Vertices carry a nonnegative rank and every edge strictly decreases rank, so
the underlying directed graph is acyclic. Multi-edges (distinct names, same
endpoints) are allowed. Iteration order of vertices and edges is the order of
first appearance; every other choice downstream is made lexicographically by
name.
"""

import re
from typing import Any, Dict, Iterable, List, Tuple, Union

import networkx as nx
from pydantic import BaseModel, ConfigDict, PrivateAttr, StrictInt, model_validator

from glg.errors import GraphValidationError

NAME_PATTERN = re.compile(r"^[A-Za-z0-9_.*]+$")


def is_valid_name(name: str) -> bool:
    """Return True when ``name`` is a legal vertex or edge name."""
    return bool(NAME_PATTERN.match(name))


class Edge(BaseModel):
    """A named directed edge from ``tail`` to ``head``."""

    model_config = ConfigDict(frozen=True)

    name: str
    tail: str
    head: str


def _check_names_and_endpoints(vertex_names: Iterable[str], edges: Iterable[Edge]) -> None:
    known = set()
    for name in vertex_names:
        if not is_valid_name(name):
            raise GraphValidationError(f"invalid vertex name {name!r}")
        known.add(name)

    seen = set()
    for edge in edges:
        if not is_valid_name(edge.name):
            raise GraphValidationError(f"invalid edge name {edge.name!r}")
        if edge.name in seen:
            raise GraphValidationError(f"duplicate edge name {edge.name!r}")
        seen.add(edge.name)
        for endpoint in (edge.tail, edge.head):
            if endpoint not in known:
                raise GraphValidationError(
                    f"edge {edge.name!r} refers to unknown vertex {endpoint!r}"
                )


class DagSkeleton(BaseModel):
    """A directed graph without ranks, the input of the ranking services."""

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...] = ()

    @model_validator(mode="after")
    def _check_structure(self) -> "DagSkeleton":
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphValidationError("duplicate vertex name in skeleton")
        _check_names_and_endpoints(self.vertices, self.edges)
        return self

    def to_networkx(self) -> nx.MultiDiGraph:
        """Build a networkx multigraph keyed by edge name."""
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            graph.add_edge(edge.tail, edge.head, key=edge.name)
        return graph


class RankedDigraph(BaseModel):
    """Generalized layered graph: ranked vertices, rank-decreasing edges."""

    model_config = ConfigDict(frozen=True)

    vertices: Dict[str, StrictInt]
    edges: Tuple[Edge, ...] = ()

    _edge_index: Dict[str, Edge] = PrivateAttr(default_factory=dict)
    _out_edges: Dict[str, List[Edge]] = PrivateAttr(default_factory=dict)
    _in_edges: Dict[str, List[Edge]] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _check_invariants(self) -> "RankedDigraph":
        for name, rank in self.vertices.items():
            if rank < 0:
                raise GraphValidationError(f"vertex {name!r} has negative rank {rank}")
        _check_names_and_endpoints(self.vertices, self.edges)
        for edge in self.edges:
            tail_rank = self.vertices[edge.tail]
            head_rank = self.vertices[edge.head]
            if tail_rank <= head_rank:
                raise GraphValidationError(
                    f"edge {edge.name!r} from {edge.tail!r} (rank {tail_rank}) to "
                    f"{edge.head!r} (rank {head_rank}) is not rank-decreasing"
                )
        return self

    def model_post_init(self, __context: Any) -> None:
        self._edge_index = {edge.name: edge for edge in self.edges}
        self._out_edges = {name: [] for name in self.vertices}
        self._in_edges = {name: [] for name in self.vertices}
        for edge in self.edges:
            self._out_edges[edge.tail].append(edge)
            self._in_edges[edge.head].append(edge)
        for adjacency in (self._out_edges, self._in_edges):
            for name in adjacency:
                adjacency[name].sort(key=lambda e: e.name)

    @classmethod
    def from_records(
        cls,
        vertices: Iterable[Tuple[str, int]],
        edges: Iterable[Tuple[str, str, str]] = (),
    ) -> "RankedDigraph":
        """Build a graph from (name, rank) and (name, tail, head) records."""
        vertex_map: Dict[str, int] = {}
        for name, rank in vertices:
            if name in vertex_map:
                raise GraphValidationError(f"duplicate vertex name {name!r}")
            vertex_map[name] = rank
        return cls(
            vertices=vertex_map,
            edges=tuple(Edge(name=n, tail=t, head=h) for n, t, h in edges),
        )

    @property
    def vertex_names(self) -> Tuple[str, ...]:
        return tuple(self.vertices)

    @property
    def edge_names(self) -> Tuple[str, ...]:
        return tuple(edge.name for edge in self.edges)

    @property
    def max_rank(self) -> int:
        return max(self.vertices.values(), default=0)

    def has_vertex(self, name: str) -> bool:
        return name in self.vertices

    def has_edge(self, name: str) -> bool:
        return name in self._edge_index

    def rank(self, vertex: str) -> int:
        """Rank |v| of a vertex."""
        try:
            return self.vertices[vertex]
        except KeyError:
            raise GraphValidationError(f"unknown vertex {vertex!r}") from None

    def edge(self, name: str) -> Edge:
        try:
            return self._edge_index[name]
        except KeyError:
            raise GraphValidationError(f"unknown edge {name!r}") from None

    def length(self, edge: Union[str, Edge]) -> int:
        """Edge length l(e) = |t(e)| - |h(e)|."""
        if isinstance(edge, str):
            edge = self.edge(edge)
        return self.vertices[edge.tail] - self.vertices[edge.head]

    def out_edges(self, vertex: str) -> List[Edge]:
        """Outgoing edges of ``vertex`` sorted by edge name."""
        self.rank(vertex)
        return list(self._out_edges[vertex])

    def in_edges(self, vertex: str) -> List[Edge]:
        """Incoming edges of ``vertex`` sorted by edge name."""
        self.rank(vertex)
        return list(self._in_edges[vertex])

    def sinks(self) -> List[str]:
        """Vertices without outgoing edges, in stored order."""
        return [name for name in self.vertices if not self._out_edges[name]]

    def sources(self) -> List[str]:
        """Vertices without incoming edges, in stored order."""
        return [name for name in self.vertices if not self._in_edges[name]]

    def edge_lengths(self) -> Dict[str, int]:
        return {edge.name: self.length(edge) for edge in self.edges}

    def layering_defect(self) -> int:
        """Sum of (l(e) - 1) over all edges; zero exactly for layered graphs."""
        return sum(self.length(edge) - 1 for edge in self.edges)

    def is_layered(self) -> bool:
        return self.layering_defect() == 0

    def skeleton(self) -> DagSkeleton:
        """Drop the ranks."""
        return DagSkeleton(vertices=self.vertex_names, edges=self.edges)

    def to_networkx(self) -> nx.MultiDiGraph:
        """Build a networkx multigraph keyed by edge name, ranks as node data."""
        graph = nx.MultiDiGraph()
        for name, rank in self.vertices.items():
            graph.add_node(name, rank=rank)
        for edge in self.edges:
            graph.add_edge(edge.tail, edge.head, key=edge.name)
        return graph
