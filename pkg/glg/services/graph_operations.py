# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Graph operations - placing vertices, adding edges, inversion and bouquets."""

import logging
from typing import Callable, Collection, Dict, List, Optional, Set, Tuple

from glg.constants import SECOND_OPERAND_PREFIX
from glg.errors import ExtremalVertexError, OperationError
from glg.models.domain.op_result import OpResult, Provenance
from glg.models.domain.ranked_digraph import Edge, RankedDigraph, is_valid_name
from glg.models.domain.series import IntPolynomial
from glg.services.moebius import iter_chains_down, iter_chains_up
from glg.services.reachability import (
    reachability,
    unique_maximal_vertex,
    unique_minimal_vertex,
)

logger = logging.getLogger(__name__)


def _identity(names: Collection[str]) -> Dict[str, str]:
    return {name: name for name in names}


def fresh_name(base: str, taken: Set[str]) -> str:
    if base not in taken:
        return base
    suffix = 1
    while f"{base}_{suffix}" in taken:
        suffix += 1
    return f"{base}_{suffix}"


def _require_new_name(name: str, taken: Collection[str], kind: str) -> None:
    if not is_valid_name(name):
        raise OperationError(f"invalid {kind} name {name!r}")
    if name in taken:
        raise OperationError(f"{kind} name {name!r} is already in use")


def add_vertex(
    graph: RankedDigraph,
    edge: str,
    position: int,
    name: str = "w",
    upper_edge: Optional[str] = None,
    lower_edge: Optional[str] = None,
) -> OpResult:
    """
    Place a new vertex on ``edge`` at rank |h(e)| + position.

    The edge e is replaced by e1: t(e) -> w of length l(e) - position and
    e2: w -> h(e) of length position, named "{e}_1" and "{e}_2" by default.

    Raises:
        OperationError: Length-1 edge, position outside 1..l(e)-1, name clash
    """
    if not graph.has_edge(edge):
        raise OperationError(f"unknown edge {edge!r}")
    length = graph.length(edge)
    if length < 2:
        raise OperationError(f"edge {edge!r} has length {length}; a vertex needs length > 1")
    if not 0 < position < length:
        raise OperationError(
            f"position {position} out of range 1..{length - 1} for edge {edge!r}"
        )

    upper_edge = upper_edge or f"{edge}_1"
    lower_edge = lower_edge or f"{edge}_2"
    _require_new_name(name, graph.vertices, "vertex")
    remaining_edges = set(graph.edge_names) - {edge}
    _require_new_name(upper_edge, remaining_edges, "edge")
    _require_new_name(lower_edge, remaining_edges | {upper_edge}, "edge")

    original = graph.edge(edge)
    vertices = dict(graph.vertices)
    vertices[name] = graph.rank(original.head) + position

    edges: List[Edge] = []
    for current in graph.edges:
        if current.name == edge:
            edges.append(Edge(name=upper_edge, tail=original.tail, head=name))
            edges.append(Edge(name=lower_edge, tail=name, head=original.head))
        else:
            edges.append(current)

    result = RankedDigraph(vertices=vertices, edges=tuple(edges))
    logger.debug(f"Placed vertex {name!r} on edge {edge!r} at rank {vertices[name]}")
    return OpResult(
        graph=result,
        provenance=Provenance(
            operation="add-vertex",
            parameters={
                "edge": edge,
                "position": position,
                "vertex": name,
                "upper_edge": upper_edge,
                "lower_edge": lower_edge,
            },
            vertex_mapping={"g": _identity(graph.vertex_names)},
            edge_mapping={"g": _identity([n for n in graph.edge_names if n != edge])},
        ),
    )


def _induced(graph: RankedDigraph, keep: Set[str]) -> RankedDigraph:
    return RankedDigraph(
        vertices={v: r for v, r in graph.vertices.items() if v in keep},
        edges=tuple(e for e in graph.edges if e.tail in keep and e.head in keep),
    )


def sub_below(graph: RankedDigraph, vertex: str) -> RankedDigraph:
    """Induced subgraph on {v : vertex >= v}."""
    graph.rank(vertex)
    reach = reachability(graph)
    return _induced(graph, {vertex, *reach.descendants(vertex)})


def sub_above(graph: RankedDigraph, vertex: str) -> RankedDigraph:
    """Induced subgraph on {v : v >= vertex}."""
    graph.rank(vertex)
    reach = reachability(graph)
    return _induced(graph, {vertex, *reach.ancestors(vertex)})


def add_edge(graph: RankedDigraph, tail: str, head: str, name: str) -> OpResult:
    """
    Add an edge tail -> head of length |tail| - |head|.

    Provenance records whether a tail -> head path already existed.

    Raises:
        OperationError: |tail| <= |head| or the edge name is taken
    """
    if graph.rank(tail) <= graph.rank(head):
        raise OperationError(
            f"cannot add edge {tail!r} -> {head!r}: rank {graph.rank(tail)} "
            f"is not above rank {graph.rank(head)}"
        )
    _require_new_name(name, graph.edge_names, "edge")

    path_existed = reachability(graph).reaches(tail, head)
    result = RankedDigraph(
        vertices=dict(graph.vertices),
        edges=graph.edges + (Edge(name=name, tail=tail, head=head),),
    )
    return OpResult(
        graph=result,
        provenance=Provenance(
            operation="add-edge",
            parameters={"tail": tail, "head": head, "edge": name},
            vertex_mapping={"g": _identity(graph.vertex_names)},
            edge_mapping={"g": _identity(graph.edge_names)},
            path_existed=path_existed,
        ),
    )


def invert(graph: RankedDigraph) -> OpResult:
    """Reverse every edge; rank becomes n - rank with n the maximum rank."""
    top = graph.max_rank
    result = RankedDigraph(
        vertices={v: top - r for v, r in graph.vertices.items()},
        edges=tuple(Edge(name=e.name, tail=e.head, head=e.tail) for e in graph.edges),
    )
    return OpResult(
        graph=result,
        provenance=Provenance(
            operation="invert",
            parameters={"max_rank": top},
            vertex_mapping={"g": _identity(graph.vertex_names)},
            edge_mapping={"g": _identity(graph.edge_names)},
        ),
    )


def _rename_second(
    names: Collection[str], taken: Set[str], identified: Dict[str, str]
) -> Dict[str, str]:
    mapping: Dict[str, str] = {}
    used = set(taken)
    for name in names:
        if name in identified:
            mapping[name] = identified[name]
            continue
        new_name = name
        while new_name in used:
            new_name = f"{SECOND_OPERAND_PREFIX}{new_name}"
        mapping[name] = new_name
        used.add(new_name)
    return mapping


def _glue(
    first: RankedDigraph,
    second: RankedDigraph,
    identified: Dict[str, str],
    first_shift: int,
    second_shift: int,
) -> Tuple[RankedDigraph, Dict[str, str], Dict[str, str]]:
    vertex_map = _rename_second(second.vertex_names, set(first.vertex_names), identified)
    edge_map = _rename_second(second.edge_names, set(first.edge_names), {})

    vertices = {v: r + first_shift for v, r in first.vertices.items()}
    for name, rank in second.vertices.items():
        if name not in identified:
            vertices[vertex_map[name]] = rank + second_shift
    edges = list(first.edges) + [
        Edge(name=edge_map[e.name], tail=vertex_map[e.tail], head=vertex_map[e.head])
        for e in second.edges
    ]
    return RankedDigraph(vertices=vertices, edges=tuple(edges)), vertex_map, edge_map


def bouquet(first: RankedDigraph, second: RankedDigraph) -> OpResult:
    """
    Γ1 ∨ Γ2: disjoint union with the two minimal vertices identified.

    The identified vertex keeps Γ1's name and clashing Γ2 names get the
    "g2." prefix. If the minimal vertices sit at different ranks, the lower
    operand is shifted up to match.
    """
    bottom_first = _extremal(unique_minimal_vertex, first, "first operand")
    bottom_second = _extremal(unique_minimal_vertex, second, "second operand")

    offset = first.rank(bottom_first) - second.rank(bottom_second)
    first_shift, second_shift = (0, offset) if offset >= 0 else (-offset, 0)

    graph, vertex_map, edge_map = _glue(
        first, second, {bottom_second: bottom_first}, first_shift, second_shift
    )
    return OpResult(
        graph=graph,
        provenance=Provenance(
            operation="bouquet",
            parameters={
                "identified_minimal": bottom_first,
                "first_rank_shift": first_shift,
                "second_rank_shift": second_shift,
            },
            vertex_mapping={"g1": _identity(first.vertex_names), "g2": vertex_map},
            edge_mapping={"g1": _identity(first.edge_names), "g2": edge_map},
        ),
    )


def double_bouquet(first: RankedDigraph, second: RankedDigraph) -> OpResult:
    """
    Γ1 ◇ Γ2: identify both the minimal and the maximal vertices.

    Raises:
        ExtremalVertexError: An operand lacks a unique minimal or maximal vertex
        OperationError: Minimal vertices off rank 0 or maximal ranks differ
    """
    bottom_first = _extremal(unique_minimal_vertex, first, "first operand")
    bottom_second = _extremal(unique_minimal_vertex, second, "second operand")
    top_first = _extremal(unique_maximal_vertex, first, "first operand")
    top_second = _extremal(unique_maximal_vertex, second, "second operand")

    for label, graph, bottom in (
        ("first", first, bottom_first),
        ("second", second, bottom_second),
    ):
        if graph.rank(bottom) != 0:
            raise OperationError(
                f"{label} operand: minimal vertex {bottom!r} has rank "
                f"{graph.rank(bottom)}, expected 0"
            )
    if first.rank(top_first) != second.rank(top_second):
        raise OperationError(
            f"maximal vertices {top_first!r} (rank {first.rank(top_first)}) and "
            f"{top_second!r} (rank {second.rank(top_second)}) differ in rank"
        )
    if top_first == bottom_first or top_second == bottom_second:
        raise OperationError("double bouquet needs operands with at least one edge")

    graph, vertex_map, edge_map = _glue(
        first,
        second,
        {bottom_second: bottom_first, top_second: top_first},
        0,
        0,
    )
    return OpResult(
        graph=graph,
        provenance=Provenance(
            operation="double-bouquet",
            parameters={
                "identified_minimal": bottom_first,
                "identified_maximal": top_first,
                "level": first.rank(top_first),
            },
            vertex_mapping={"g1": _identity(first.vertex_names), "g2": vertex_map},
            edge_mapping={"g1": _identity(first.edge_names), "g2": edge_map},
        ),
    )


def _extremal(
    finder: Callable[[RankedDigraph], str], graph: RankedDigraph, label: str
) -> str:
    try:
        return finder(graph)
    except ExtremalVertexError as exc:
        raise ExtremalVertexError(exc.kind, exc.candidates, context=label) from None


def moebius_delta_add_edge(graph: RankedDigraph, tail: str, head: str) -> IntPolynomial:
    """
    M(Γ^e) - M(Γ) for the edge tail -> head, by chain pairs.

    Sums (-1)^(l+m+1) z^(|v1| - |w_m|) over chains v1 > ... > v_l >= tail and
    head >= w1 > ... > w_m (l, m >= 1) with no path v_l -> w1 in Γ.
    """
    if graph.rank(tail) <= graph.rank(head):
        raise OperationError(
            f"cannot add edge {tail!r} -> {head!r}: rank {graph.rank(tail)} "
            f"is not above rank {graph.rank(head)}"
        )
    reach = reachability(graph)

    upper_chains = [
        chain
        for last in [tail, *reach.ancestors(tail)]
        for chain in iter_chains_up(reach, last)
    ]
    lower_chains = [
        chain
        for first in [head, *reach.descendants(head)]
        for chain in iter_chains_down(reach, first)
    ]

    terms: Dict[int, int] = {}
    for upper in upper_chains:
        for lower in lower_chains:
            if reach.reaches(upper[-1], lower[0]):
                continue
            sign = 1 if (len(upper) + len(lower) + 1) % 2 == 0 else -1
            gap = graph.rank(upper[0]) - graph.rank(lower[-1])
            terms[gap] = terms.get(gap, 0) + sign
    return IntPolynomial.from_terms(terms)


def place_vertex(graph: RankedDigraph, edge: str, position: int) -> OpResult:
    """:func:`add_vertex` with fresh vertex and edge names derived from ``edge``."""
    vertex = fresh_name(f"{edge}_w", set(graph.vertex_names))
    taken = set(graph.edge_names) - {edge}
    upper = fresh_name(f"{edge}_1", taken)
    lower = fresh_name(f"{edge}_2", taken | {upper})
    return add_vertex(graph, edge, position, vertex, upper, lower)


def layered_refinement(graph: RankedDigraph) -> List[OpResult]:
    """
    Place vertices on long edges until every edge has length 1.

    Each step splits the first long edge (stored order) one rank above its
    head, so the layering defect drops by one per step.
    """
    steps: List[OpResult] = []
    current = graph
    while not current.is_layered():
        edge = next(e for e in current.edges if current.length(e) > 1)
        result = place_vertex(current, edge.name, 1)
        steps.append(result)
        current = result.graph
    logger.info(f"Layered refinement took {len(steps)} steps")
    return steps
