# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Algebra tools - Möbius data, series, basis and relations of A(Γ)."""

import logging
from typing import Dict, List, Optional

from glg.errors import ExtremalVertexError
from glg.models.domain.ranked_digraph import RankedDigraph
from glg.models.domain.series import IntPolynomial, RationalSeries
from glg.models.responses.algebra_responses import (
    BasisResponse,
    HilbertResponse,
    MoebiusEntry,
    MoebiusResponse,
    MSeriesResponse,
    RelationEntry,
    RelationsResponse,
    SeriesPayload,
)
from glg.services.basis import count_basis, count_basis_by_vertex, enumerate_basis
from glg.services.hilbert import hilbert_series, hilbert_tree, is_rooted_tree
from glg.services.moebius import m_lower, m_series, m_upper, moebius_table
from glg.services.relations import relation_records

logger = logging.getLogger(__name__)


def moebius_tool(graph: RankedDigraph) -> dict:
    """μ(v, w) over all comparable pairs, in stored vertex order."""
    table = moebius_table(graph)
    response = MoebiusResponse(
        pair_count=table.pair_count(),
        pairs=[
            MoebiusEntry(upper=upper, lower=lower, mu=value)
            for upper, lower, value in table.pairs()
        ],
    )
    return response.model_dump()


def _optional(polynomial: Optional[IntPolynomial]) -> Optional[List[int]]:
    return None if polynomial is None else polynomial.to_list()


def mseries_tool(graph: RankedDigraph) -> dict:
    """M(Γ); M_lower and M_upper whenever the extremal vertex is unique."""
    table = moebius_table(graph)
    moebius = m_series(graph, table)
    upper: Optional[IntPolynomial] = None
    try:
        upper = m_upper(graph, table)
    except ExtremalVertexError:
        logger.info("No unique maximal vertex; omitting M_upper")
    response = MSeriesResponse(
        m_series=moebius.to_list(),
        text=str(moebius),
        m_lower=m_lower(graph, table).to_list(),
        m_upper=_optional(upper),
    )
    return response.model_dump()


def _series_payload(rational: RationalSeries, order: int) -> SeriesPayload:
    return SeriesPayload(
        num=rational.numerator.to_list(),
        den=rational.denominator.to_list(),
        coeffs=rational.expand(order).to_list(),
        order=order,
    )


def hilbert_tool(graph: RankedDigraph, order: int, reduce: bool = False) -> dict:
    """Hilbert series, plus the tree closed form when Γ is a rooted tree."""
    series = hilbert_series(graph, order, reduce=reduce)
    tree_formula = (
        _series_payload(hilbert_tree(graph), order) if is_rooted_tree(graph) else None
    )
    response = HilbertResponse(
        num=series.rational.numerator.to_list(),
        den=series.rational.denominator.to_list(),
        coeffs=series.expansion.to_list(),
        order=order,
        reduced=reduce,
        text=str(series.rational),
        tree_formula=tree_formula,
    )
    return response.model_dump()


def basis_tool(graph: RankedDigraph, max_degree: int, words: bool = False) -> dict:
    """Counts of B(Γ) by degree; the words themselves when ``words`` is set."""
    listed = None
    if words:
        listed = [
            [str(word) for word in by_degree]
            for by_degree in enumerate_basis(graph, max_degree)
        ]
    response = BasisResponse(
        max_degree=max_degree,
        counts=count_basis(graph, max_degree),
        by_vertex=count_basis_by_vertex(graph, max_degree),
        words=listed,
    )
    return response.model_dump()


def relations_tool(graph: RankedDigraph, truncation: Optional[int] = None) -> dict:
    """Reference-path relation generators, degree-tagged."""
    records = relation_records(graph, truncation)
    by_degree: Dict[int, int] = {}
    for record in records:
        by_degree[record.degree] = by_degree.get(record.degree, 0) + 1
    response = RelationsResponse(
        truncation=truncation,
        count=len(records),
        by_degree={str(d): n for d, n in sorted(by_degree.items())},
        relations=[
            RelationEntry(
                source=record.source,
                target=record.target,
                reference_path=list(record.reference_path),
                other_path=list(record.other_path),
                degree=record.degree,
                polynomial=str(record.polynomial),
            )
            for record in records
        ],
    )
    return response.model_dump()
