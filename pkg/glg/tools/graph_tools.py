# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Graph tools - validate, rank and construct graphs."""

import logging
from typing import Dict, Optional, Sequence, Union

from glg.models.domain.op_result import OpResult
from glg.models.domain.ranked_digraph import RankedDigraph
from glg.models.responses.graph_responses import (
    GeneratedGraphResponse,
    GraphMapping,
    OperationInfo,
    OpResponse,
    RankEnumerationResponse,
    RankResponse,
    ValidateResponse,
)
from glg.services.generators import (
    gen_chain,
    gen_delta,
    gen_random_dag,
    gen_sym_orbit,
    gen_tree,
)
from glg.services.graph_operations import (
    add_edge,
    add_vertex,
    bouquet,
    double_bouquet,
    invert,
)
from glg.services.graph_parser import serialize_graph
from glg.services.ranking import apply_ranking, canonical_rank, enumerate_rank_functions

logger = logging.getLogger(__name__)


def validate_tool(graph: RankedDigraph) -> dict:
    """Structural summary of a graph that parsed and validated.

    Returns:
        Dict representation of ValidateResponse
    """
    sinks, sources = graph.sinks(), graph.sources()
    unique_minimal = sinks[0] if len(sinks) == 1 else None
    response = ValidateResponse(
        vertices=len(graph.vertices),
        edges=len(graph.edges),
        max_rank=graph.max_rank,
        edge_lengths=graph.edge_lengths(),
        layered=graph.is_layered(),
        layering_defect=graph.layering_defect(),
        sinks=sinks,
        sources=sources,
        unique_minimal=unique_minimal,
        minimal_at_rank_zero=unique_minimal is not None
        and graph.rank(unique_minimal) == 0,
        unique_maximal=sources[0] if len(sources) == 1 else None,
    )
    return response.model_dump()


def rank_canonical_tool(graph: RankedDigraph) -> dict:
    """Canonical (pointwise least) ranks, ignoring the ranks given in the file."""
    ranks = canonical_rank(graph)
    response = RankResponse(
        ranks=ranks, graph=serialize_graph(apply_ranking(graph, ranks))
    )
    return response.model_dump()


def rank_enumerate_tool(graph: RankedDigraph, bound: Optional[int] = None) -> dict:
    """All rank functions bounded by ``bound`` (default: the canonical maximum)."""
    canonical_max = max(canonical_rank(graph).values(), default=0)
    bound = canonical_max if bound is None else bound
    functions = enumerate_rank_functions(graph, bound)
    response = RankEnumerationResponse(
        bound=bound,
        canonical_max=canonical_max,
        below_canonical=bound < canonical_max,
        count=len(functions),
        functions=functions,
    )
    return response.model_dump()


def _op_response(result: OpResult) -> dict:
    provenance = result.provenance
    response = OpResponse(
        graph=serialize_graph(result.graph),
        mapping=GraphMapping(
            vertices=provenance.vertex_mapping, edges=provenance.edge_mapping
        ),
        provenance=OperationInfo(
            operation=provenance.operation,
            parameters=provenance.parameters,
            path_existed=provenance.path_existed,
        ),
    )
    return response.model_dump()


def add_vertex_tool(
    graph: RankedDigraph, edge: str, position: int, name: str = "w"
) -> dict:
    return _op_response(add_vertex(graph, edge, position, name))


def add_edge_tool(graph: RankedDigraph, tail: str, head: str, name: str) -> dict:
    return _op_response(add_edge(graph, tail, head, name))


def invert_tool(graph: RankedDigraph) -> dict:
    return _op_response(invert(graph))


def bouquet_tool(first: RankedDigraph, second: RankedDigraph) -> dict:
    return _op_response(bouquet(first, second))


def double_bouquet_tool(first: RankedDigraph, second: RankedDigraph) -> dict:
    return _op_response(double_bouquet(first, second))


GenParameter = Union[str, int, float, None]


def _generated(
    generator: str, parameters: Dict[str, GenParameter], graph: RankedDigraph
) -> dict:
    logger.info(f"Generated {generator} graph with {len(graph.vertices)} vertices")
    response = GeneratedGraphResponse(
        generator=generator, parameters=parameters, graph=serialize_graph(graph)
    )
    return response.model_dump()


def gen_delta_tool(length: int) -> dict:
    return _generated("delta", {"length": length}, gen_delta(length))


def gen_chain_tool(lengths: Sequence[int]) -> dict:
    return _generated(
        "chain", {"lengths": ",".join(str(n) for n in lengths)}, gen_chain(lengths)
    )


def gen_tree_tool(spec: str) -> dict:
    return _generated("tree", {"spec": spec}, gen_tree(spec))


def gen_sym_tool(size: int, permutation: str) -> dict:
    return _generated(
        "sym",
        {"size": size, "permutation": permutation},
        gen_sym_orbit(size, permutation),
    )


def gen_random_tool(
    vertex_count: int,
    edge_probability: float,
    rank_bound: Optional[int],
    seed: int,
) -> dict:
    graph = gen_random_dag(vertex_count, edge_probability, rank_bound, seed)
    return _generated(
        "random",
        {
            "vertices": vertex_count,
            "edge_probability": edge_probability,
            "rank_bound": rank_bound,
            "seed": seed,
        },
        graph,
    )
