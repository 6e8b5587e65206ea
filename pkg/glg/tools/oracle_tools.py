# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Oracle tools - graded dimensions, NCI verdicts and the identity suite."""

import logging
from typing import Optional, Sequence

from glg.constants import MAX_MONOMIALS_PER_DEGREE, MAX_ROWS_PER_DEGREE
from glg.models.domain.ranked_digraph import RankedDigraph
from glg.models.responses.algebra_responses import OracleResponse
from glg.services.hilbert import hilbert_series
from glg.services.identity_checks import check_identities
from glg.services.oracle import graded_dimensions, minimal_relation_series, nci_check
from glg.services.reachability import has_ground_sink

logger = logging.getLogger(__name__)


def oracle_tool(
    graph: RankedDigraph,
    max_degree: int,
    truncation: Optional[int] = None,
    monomial_budget: int = MAX_MONOMIALS_PER_DEGREE,
    row_budget: int = MAX_ROWS_PER_DEGREE,
) -> dict:
    """Graded dimensions and minimal relation counts by exact linear algebra.

    When Γ has a unique minimal vertex at rank 0 and no truncation is asked
    for, the dimensions are compared against the Hilbert series.

    Returns:
        Dict representation of OracleResponse
    """
    dimensions = graded_dimensions(
        graph, max_degree, truncation, monomial_budget, row_budget
    )
    relations = minimal_relation_series(
        graph, max_degree, truncation, monomial_budget, row_budget
    )

    coefficients = None
    if truncation is None and has_ground_sink(graph):
        coefficients = hilbert_series(graph, max_degree).expansion.to_list()
        if coefficients != dimensions:
            logger.warning(
                f"Oracle dimensions {dimensions} differ from the Hilbert series "
                f"{coefficients}"
            )

    response = OracleResponse(
        max_degree=max_degree,
        truncation=truncation,
        dimensions=dimensions,
        relation_series=relations,
        hilbert_coefficients=coefficients,
        agrees_with_hilbert=None if coefficients is None else coefficients == dimensions,
    )
    return response.model_dump()


def nci_tool(
    graph: RankedDigraph,
    max_degree: int,
    monomial_budget: int = MAX_MONOMIALS_PER_DEGREE,
    row_budget: int = MAX_ROWS_PER_DEGREE,
) -> dict:
    """Noncommutative complete intersection verdict to order ``max_degree``."""
    return nci_check(graph, max_degree, monomial_budget, row_budget).model_dump()


def identities_tool(
    graphs: Sequence[RankedDigraph],
    labels: Optional[Sequence[str]],
    max_degree: int,
    monomial_budget: int = MAX_MONOMIALS_PER_DEGREE,
    row_budget: int = MAX_ROWS_PER_DEGREE,
) -> dict:
    """Per-identity pass/fail for one graph or a pair."""
    report = check_identities(
        graphs,
        labels,
        max_degree=max_degree,
        monomial_budget=monomial_budget,
        row_budget=row_budget,
    )
    if not report.passed:
        failed = [identity.name for identity in report.identities if not identity.passed]
        logger.warning(f"Identities failed: {', '.join(failed)}")
    return report.model_dump()
