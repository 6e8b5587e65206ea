# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Identity suite service - series identities of the graph operations.

Each identity is checked on every instance the given graph (or pair of
graphs) admits. Instances whose preconditions fail are skipped and logged,
never counted as failures.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from glg.constants import (
    DEFAULT_IDENTITY_DEGREE,
    MAX_MONOMIALS_PER_DEGREE,
    MAX_ROWS_PER_DEGREE,
)
from glg.errors import BudgetExceededError, ExtremalVertexError, OperationError
from glg.models.domain.ranked_digraph import RankedDigraph
from glg.models.domain.series import IntPolynomial, TruncatedSeries
from glg.models.responses.identity_report import IdentityCheck, IdentityReport
from glg.services.generators import gen_delta
from glg.services.graph_operations import (
    add_edge,
    bouquet,
    double_bouquet,
    fresh_name,
    invert,
    moebius_delta_add_edge,
    place_vertex,
    sub_above,
    sub_below,
)
from glg.services.hilbert import hilbert_series, hilbert_series_from_chains
from glg.services.moebius import m_lower, m_upper, moebius_polynomial
from glg.services.oracle import graded_dimensions, nci_check
from glg.services.reachability import has_ground_sink

logger = logging.getLogger(__name__)

Z = IntPolynomial.monomial(1)


class _Tally:
    """Running count of instances and failures for one identity."""

    def __init__(self, name: str, statement: str) -> None:
        self.name = name
        self.statement = statement
        self.instances = 0
        self.skipped = 0
        self.failures: List[str] = []

    def record(self, holds: bool, detail: str) -> None:
        self.instances += 1
        if not holds:
            self.failures.append(detail)
            logger.info(f"{self.name} failed: {detail}")

    def skip(self, reason: str) -> None:
        self.skipped += 1
        logger.warning(f"{self.name}: skipped {reason}")

    def result(self) -> IdentityCheck:
        return IdentityCheck(
            name=self.name,
            statement=self.statement,
            passed=not self.failures,
            instances=self.instances,
            skipped=self.skipped,
            failures=list(self.failures),
        )


class _Budgets:
    def __init__(self, monomials: int, rows: int) -> None:
        self.monomials = monomials
        self.rows = rows

    def dimensions(self, graph: RankedDigraph, degree: int) -> List[int]:
        return graded_dimensions(
            graph, degree, monomial_budget=self.monomials, row_budget=self.rows
        )


def _unique_sink(graph: RankedDigraph) -> bool:
    return len(graph.sinks()) == 1


def _unique_source(graph: RankedDigraph) -> bool:
    return len(graph.sources()) == 1


def _reciprocal(graph: RankedDigraph, order: int) -> TruncatedSeries:
    """1/h(z) to the given order."""
    return hilbert_series(graph, order).rational.reciprocal().expand(order)


def check_add_vertex(graph: RankedDigraph, label: str, tally: _Tally) -> None:
    """M(Γ^w) = M(Γ) + M_lower(Γ^w above w)·M_upper(Γ^w below w), all legal (e, i)."""
    base = moebius_polynomial(graph)
    for edge in graph.edges:
        for position in range(1, graph.length(edge)):
            placed = place_vertex(graph, edge.name, position)
            vertex = str(placed.provenance.parameters["vertex"])
            refined = placed.graph
            expected = base + m_lower(sub_above(refined, vertex)) * m_upper(
                sub_below(refined, vertex)
            )
            actual = moebius_polynomial(refined)
            tally.record(
                actual == expected,
                f"{label}: vertex on {edge.name} at {position}: "
                f"M = {actual}, expected {expected}",
            )


def check_add_edge(
    graph: RankedDigraph,
    label: str,
    tallies: Dict[str, _Tally],
    order: int,
    oracle_degree: int,
    budgets: _Budgets,
) -> None:
    """Chain-pair difference, redundant-edge invariance and surjectivity."""
    base = moebius_polynomial(graph)
    grounded = has_ground_sink(graph)
    base_hilbert = hilbert_series(graph, order).expansion if grounded else None
    base_dimensions: Optional[List[int]] = None
    dimensions_failed = False

    for tail in graph.vertex_names:
        for head in graph.vertex_names:
            if graph.rank(tail) <= graph.rank(head):
                continue
            name = fresh_name("e_new", set(graph.edge_names))
            result = add_edge(graph, tail, head, name)
            extended = result.graph
            where = f"{label}: edge {tail} -> {head}"

            moebius = moebius_polynomial(extended)
            delta = moebius_delta_add_edge(graph, tail, head)
            tally = tallies["add-edge"]
            tally.record(
                delta == moebius - base,
                f"{where}: chain sum {delta}, direct difference {moebius - base}",
            )

            if result.provenance.path_existed:
                tally = tallies["redundant-edge"]
                tally.record(moebius == base, f"{where}: M changed to {moebius}")
                if base_hilbert is not None:
                    expansion = hilbert_series(extended, order).expansion
                    tally.record(
                        expansion == base_hilbert,
                        f"{where}: h changed to {expansion.to_list()}",
                    )
            else:
                tally = tallies["add-edge-surjective"]
                if not _unique_sink(graph):
                    tally.skip(f"{where}: no unique minimal vertex")
                    continue

            if dimensions_failed:
                tally.skip(f"{where}: oracle budget exceeded")
                continue
            try:
                if base_dimensions is None:
                    base_dimensions = budgets.dimensions(graph, oracle_degree)
                dimensions = budgets.dimensions(extended, oracle_degree)
            except BudgetExceededError as exc:
                dimensions_failed = base_dimensions is None
                tally.skip(f"{where}: {exc}")
                continue

            if result.provenance.path_existed:
                tally.record(
                    dimensions == base_dimensions,
                    f"{where}: dims {dimensions}, expected {base_dimensions}",
                )
            else:
                tally.record(
                    all(a <= b for a, b in zip(dimensions, base_dimensions)),
                    f"{where}: dims {dimensions} exceed {base_dimensions}",
                )


def check_inversion(graph: RankedDigraph, label: str, tally: _Tally) -> None:
    """M(Γ̌) = M(Γ) when Γ has a unique maximal and a unique minimal vertex."""
    if not (_unique_sink(graph) and _unique_source(graph)):
        tally.skip(f"{label}: needs unique maximal and minimal vertices")
        return
    inverted = invert(graph).graph
    actual, expected = moebius_polynomial(inverted), moebius_polynomial(graph)
    tally.record(actual == expected, f"{label}: M(inverted) = {actual}, M = {expected}")


def check_chain_denominator(
    graph: RankedDigraph, label: str, order: int, tally: _Tally
) -> None:
    """The chain-sum denominator equals 1 - z·M(Γ)."""
    if not has_ground_sink(graph):
        tally.skip(f"{label}: needs a unique minimal vertex at rank 0")
        return
    chains = hilbert_series_from_chains(graph, order).rational.denominator
    expected = IntPolynomial.one() - Z * moebius_polynomial(graph)
    tally.record(chains == expected, f"{label}: chain sum {chains}, expected {expected}")


def check_bouquet(
    first: RankedDigraph,
    second: RankedDigraph,
    label: str,
    order: int,
    tallies: Dict[str, _Tally],
) -> None:
    """M(Γ1 ∨ Γ2) = M1 + M2 - 1 and 1/h(∨) = 1/h1 + 1/h2 - 1."""
    tally = tallies["bouquet"]
    try:
        joined = bouquet(first, second).graph
    except ExtremalVertexError as exc:
        tally.skip(f"{label}: {exc}")
        return
    actual = moebius_polynomial(joined)
    expected = moebius_polynomial(first) + moebius_polynomial(second) - 1
    tally.record(actual == expected, f"{label}: M = {actual}, expected {expected}")

    tally = tallies["bouquet-series"]
    if not (has_ground_sink(first) and has_ground_sink(second)):
        tally.skip(f"{label}: operands need minimal vertices at rank 0")
        return
    lhs = _reciprocal(joined, order)
    rhs = _reciprocal(first, order) + _reciprocal(second, order) - TruncatedSeries.one(order)
    tally.record(lhs == rhs, f"{label}: 1/h = {lhs.to_list()}, expected {rhs.to_list()}")


def _double(
    first: RankedDigraph, second: RankedDigraph
) -> Tuple[Optional[RankedDigraph], int, str]:
    try:
        result = double_bouquet(first, second)
    except (ExtremalVertexError, OperationError) as exc:
        return None, 0, str(exc)
    level = result.provenance.parameters["level"]
    return result.graph, int(level) if isinstance(level, int) else 0, ""


def check_double_bouquet(
    first: RankedDigraph,
    second: RankedDigraph,
    label: str,
    order: int,
    tallies: Dict[str, _Tally],
) -> None:
    """M(◇) = M1 + M2 - 2 + z^d and 1/h(◇) = 1/h1 + 1/h2 - 1/h(Δ(d))."""
    joined, level, reason = _double(first, second)
    if joined is None:
        tallies["double-bouquet"].skip(f"{label}: {reason}")
        tallies["double-bouquet-series"].skip(f"{label}: {reason}")
        return

    actual = moebius_polynomial(joined)
    expected = (
        moebius_polynomial(first)
        + moebius_polynomial(second)
        - 2
        + IntPolynomial.monomial(level)
    )
    tallies["double-bouquet"].record(
        actual == expected, f"{label}: M = {actual}, expected {expected}"
    )

    lhs = _reciprocal(joined, order)
    rhs = (
        _reciprocal(first, order)
        + _reciprocal(second, order)
        - _reciprocal(gen_delta(level), order)
    )
    tallies["double-bouquet-series"].record(
        lhs == rhs, f"{label}: 1/h = {lhs.to_list()}, expected {rhs.to_list()}"
    )


def check_nci_double_bouquet(
    first: RankedDigraph,
    second: RankedDigraph,
    label: str,
    order: int,
    budgets: _Budgets,
    tally: _Tally,
) -> None:
    """Both operands NCI to the given order implies the double bouquet is too."""
    joined, _, reason = _double(first, second)
    if joined is None:
        tally.skip(f"{label}: {reason}")
        return
    try:
        operands = [
            nci_check(graph, order, budgets.monomials, budgets.rows)
            for graph in (first, second)
        ]
        if not all(report.is_nci for report in operands):
            tally.skip(f"{label}: an operand is not NCI to order {order}")
            return
        report = nci_check(joined, order, budgets.monomials, budgets.rows)
    except BudgetExceededError as exc:
        tally.skip(f"{label}: {exc}")
        return
    tally.record(report.is_nci, f"{label}: double bouquet fails at degree {report.witness}")


_STATEMENTS = {
    "add-vertex": "M(Γ^w) = M(Γ) + M_lower(Γ^w_+)·M_upper(Γ^w_-)",
    "add-edge": "M(Γ^e) - M(Γ) = Σ (-1)^(l+m+1) z^(|v1|-|w_m|) over unlinked chain pairs",
    "redundant-edge": "M, h and graded dimensions are unchanged when a v -> w path exists",
    "add-edge-surjective": "dim A(Γ^e)_n <= dim A(Γ)_n",
    "inversion": "M(inverted Γ) = M(Γ)",
    "chain-denominator": "chain-sum denominator = 1 - z·M(Γ)",
    "bouquet": "M(Γ1 ∨ Γ2) = M(Γ1) + M(Γ2) - 1",
    "bouquet-series": "1/h(Γ1 ∨ Γ2) = 1/h(Γ1) + 1/h(Γ2) - 1",
    "double-bouquet": "M(Γ1 ◇ Γ2) = M(Γ1) + M(Γ2) - 2 + z^d",
    "double-bouquet-series": "1/h(Γ1 ◇ Γ2) = 1/h(Γ1) + 1/h(Γ2) - 1/h(Δ(d))",
    "nci-double-bouquet": "Γ1, Γ2 NCI implies Γ1 ◇ Γ2 NCI",
}


def check_identities(
    graphs: Sequence[RankedDigraph],
    labels: Optional[Sequence[str]] = None,
    max_degree: int = DEFAULT_IDENTITY_DEGREE,
    oracle_degree: Optional[int] = None,
    monomial_budget: int = MAX_MONOMIALS_PER_DEGREE,
    row_budget: int = MAX_ROWS_PER_DEGREE,
) -> IdentityReport:
    """
    Run the full identity suite on one graph or a pair of graphs.

    Unary identities run on every graph. Binary identities (bouquets) run on
    the pair, or on (Γ, Γ) when a single graph is given.

    Args:
        graphs: One or two graphs
        labels: Names used in failure messages, default "g" or "g1"/"g2"
        max_degree: Truncation order of series comparisons and the NCI test
        oracle_degree: Top degree for oracle dimensions, default
            min(max_degree, DEFAULT_IDENTITY_DEGREE)
    """
    if not 1 <= len(graphs) <= 2:
        raise OperationError(f"identity suite takes one or two graphs, got {len(graphs)}")
    if labels is None:
        labels = ["g"] if len(graphs) == 1 else ["g1", "g2"]
    if oracle_degree is None:
        oracle_degree = min(max_degree, DEFAULT_IDENTITY_DEGREE)
    budgets = _Budgets(monomial_budget, row_budget)
    tallies = {name: _Tally(name, statement) for name, statement in _STATEMENTS.items()}

    for graph, label in zip(graphs, labels):
        logger.info(f"Unary identities on {label}")
        check_add_vertex(graph, label, tallies["add-vertex"])
        check_add_edge(graph, label, tallies, max_degree, oracle_degree, budgets)
        check_inversion(graph, label, tallies["inversion"])
        check_chain_denominator(graph, label, max_degree, tallies["chain-denominator"])

    first, second = graphs[0], graphs[-1]
    pair = f"({labels[0]}, {labels[-1]})"
    check_bouquet(first, second, pair, max_degree, tallies)
    check_double_bouquet(first, second, pair, max_degree, tallies)
    check_nci_double_bouquet(
        first, second, pair, max_degree, budgets, tallies["nci-double-bouquet"]
    )

    identities = [tally.result() for tally in tallies.values()]
    return IdentityReport(
        graphs=list(labels),
        max_degree=max_degree,
        passed=all(identity.passed for identity in identities),
        identities=identities,
    )
