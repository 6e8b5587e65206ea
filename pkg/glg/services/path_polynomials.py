# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Path polynomial service - P_e, P_π, canonical paths and e(v, j)."""

import logging
from typing import Dict, Optional, Sequence, Tuple

from glg.errors import PathError
from glg.models.domain.free_polynomial import FreePolynomial, Monomial
from glg.models.domain.path_poly import PathPoly
from glg.models.domain.ranked_digraph import RankedDigraph
from glg.services.hilbert import filtration_degree
from glg.services.reachability import require_ground_sink

logger = logging.getLogger(__name__)


def edge_poly(graph: RankedDigraph, edge: str) -> PathPoly:
    """Coefficients [1, a_1(e), ..., a_l(e)] of P_e."""
    if not graph.has_edge(edge):
        raise PathError(f"unknown edge {edge!r}")
    length = graph.length(edge)
    coefficients = (FreePolynomial.one(),) + tuple(
        FreePolynomial.generator(edge, index) for index in range(1, length + 1)
    )
    return PathPoly((edge,), coefficients)


def check_path(graph: RankedDigraph, path: Sequence[str]) -> None:
    """
    Raises:
        PathError: Unknown edge, or consecutive edges that do not meet
    """
    for edge in path:
        if not graph.has_edge(edge):
            raise PathError(f"unknown edge {edge!r} in path {list(path)}")
    for first, second in zip(path, path[1:]):
        if graph.edge(first).head != graph.edge(second).tail:
            raise PathError(
                f"broken path: head of {first!r} is {graph.edge(first).head!r} "
                f"but tail of {second!r} is {graph.edge(second).tail!r}"
            )


def path_poly(graph: RankedDigraph, path: Sequence[str]) -> PathPoly:
    """
    Coefficient list of P_π = P_e1·P_e2···P_er.

    The empty path gives [1].
    """
    check_path(graph, path)
    result = PathPoly((), (FreePolynomial.one(),))
    for edge in path:
        result = result.convolve(edge_poly(graph, edge))
    return result


def canonical_path(graph: RankedDigraph, vertex: str) -> Tuple[str, ...]:
    """
    π_v: follow the least-named outgoing edge until the minimal vertex.

    The minimal vertex itself gets the empty path.
    """
    require_ground_sink(graph)
    path = []
    current = vertex
    while True:
        out_edges = graph.out_edges(current)
        if not out_edges:
            break
        path.append(out_edges[0].name)
        current = out_edges[0].head
    return tuple(path)


class VertexCoefficients:
    """Lazily computed P_{π_v} for every vertex of a graph with a ground sink."""

    def __init__(self, graph: RankedDigraph) -> None:
        self.graph = graph
        self.bottom = require_ground_sink(graph)
        self._polys: Dict[str, PathPoly] = {}

    def poly(self, vertex: str) -> PathPoly:
        if vertex not in self._polys:
            self._polys[vertex] = path_poly(self.graph, canonical_path(self.graph, vertex))
        return self._polys[vertex]

    def coeff(self, vertex: str, index: int) -> FreePolynomial:
        """e(v, j)."""
        rank = self.graph.rank(vertex)
        if vertex == self.bottom:
            raise PathError(f"vertex {vertex!r} is the minimal vertex; e(v, j) is undefined")
        if not 1 <= index <= rank:
            raise PathError(
                f"index {index} out of range 1..{rank} for vertex {vertex!r}"
            )
        return self.poly(vertex).coefficient(index)


def vertex_coeff(
    graph: RankedDigraph,
    vertex: str,
    index: int,
    coefficients: Optional[VertexCoefficients] = None,
) -> FreePolynomial:
    """
    e(v, j) = e(π_v, j).

    Raises:
        PathError: If v is the minimal vertex or j is outside 1..|v|
    """
    return (coefficients or VertexCoefficients(graph)).coeff(vertex, index)


def filtered_degree_of_monomial(graph: RankedDigraph, monomial: Monomial) -> int:
    """Σ f(|t(e)|, i) over the generators a_i(e) of the monomial."""
    return sum(
        filtration_degree(graph.rank(graph.edge(g.edge).tail), g.index) for g in monomial
    )


def path_filtration_holds(graph: RankedDigraph, path: Sequence[str]) -> bool:
    """Every monomial of e(π, j) has filtered degree at most f(|t(π)|, j)."""
    if not path:
        return True
    poly = path_poly(graph, path)
    top = graph.rank(graph.edge(path[0]).tail)
    for index in range(1, poly.length + 1):
        bound = filtration_degree(top, index)
        for monomial in poly.coefficient(index).monomials():
            if filtered_degree_of_monomial(graph, monomial) > bound:
                logger.warning(
                    f"Monomial of e({list(path)}, {index}) exceeds filtered degree {bound}"
                )
                return False
    return True
