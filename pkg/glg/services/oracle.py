# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Oracle service - graded dimensions of A(Γ) by exact linear algebra.

Nothing here uses the closed forms of the Hilbert series or the words of
B(Γ): the ideal is built degree by degree in the monomial basis of the
free algebra, using

    R_n = Σ_x x·R_(n - deg x) + Σ_r r·T_(n - deg r)

over generators x and relation generators r, and dim A_n = #monomials - rank.
"""

import logging
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from glg.constants import MAX_MONOMIALS_PER_DEGREE, MAX_ROWS_PER_DEGREE
from glg.errors import BudgetExceededError, OperationError
from glg.models.domain.free_polynomial import FreePolynomial, Generator
from glg.models.domain.ranked_digraph import RankedDigraph
from glg.models.domain.series import TruncatedSeries
from glg.models.responses.oracle_reports import (
    DegreeCheck,
    IdealEqualityReport,
    IndependenceReport,
    InjectionReport,
    NciReport,
)
from glg.services.basis import basis_word_to_free_poly, enumerate_basis
from glg.services.graph_operations import place_vertex
from glg.services.hilbert import hilbert_series
from glg.services.morphisms import add_vertex_map, apply_generator_map, generators_of
from glg.services.path_polynomials import VertexCoefficients
from glg.services.reachability import require_ground_sink
from glg.services.relations import (
    all_pairs_relation_generators,
    relation_records,
    relations_by_degree,
)
from glg.utils.rational_matrix import RationalMatrix

logger = logging.getLogger(__name__)

# monomials inside the oracle are tuples of generator codes
CodedMonomial = Tuple[int, ...]
Row = Mapping[CodedMonomial, Any]


def _prepend(code: int, row: Row) -> Dict[CodedMonomial, Any]:
    return {(code,) + key: value for key, value in row.items()}


def _append(row: Row, code: int) -> Dict[CodedMonomial, Any]:
    return {key + (code,): value for key, value in row.items()}


class GradedIdeal:
    """Degree-by-degree echelon bases of a two-sided homogeneous ideal of T(E♯).

    Generators are coded by their position in sorted order, so a coded
    monomial compares like the monomial itself. Left multiplication keeps
    leading monomials apart, which lets x·I_(n - deg x) enter each component
    without any elimination; only the r·T rows are reduced.

    Args:
        graph: Supplies the generators a_i(e)
        relations: Homogeneous generating set of the ideal
        monomial_budget: Largest number of degree-n monomials allowed
        row_budget: Largest number of spanning rows assembled per degree
    """

    def __init__(
        self,
        graph: RankedDigraph,
        relations: Sequence[FreePolynomial],
        monomial_budget: int = MAX_MONOMIALS_PER_DEGREE,
        row_budget: int = MAX_ROWS_PER_DEGREE,
    ) -> None:
        self.graph = graph
        self.monomial_budget = monomial_budget
        self.row_budget = row_budget

        ordered = sorted(generators_of(graph))
        self.codes: Dict[Generator, int] = {g: code for code, g in enumerate(ordered)}
        self.generators: Dict[int, List[int]] = {}
        for generator in ordered:
            self.generators.setdefault(generator.degree, []).append(self.codes[generator])

        self.relations: Dict[int, List[Dict[CodedMonomial, Any]]] = {}
        for relation in relations:
            if relation.is_zero():
                continue
            degrees = relation.degrees()
            if len(degrees) != 1:
                raise OperationError(f"relation {relation} is not homogeneous")
            self.relations.setdefault(degrees[0], []).append(self.encode(relation))

        self._counts: List[int] = [1]
        self._monomials: Dict[int, List[CodedMonomial]] = {0: [()]}
        self._ideal: Dict[int, RationalMatrix] = {}

    def encode(self, polynomial: FreePolynomial) -> Dict[CodedMonomial, Any]:
        """Terms of ``polynomial`` keyed by coded monomials."""
        try:
            return {
                tuple(self.codes[g] for g in monomial): coefficient
                for monomial, coefficient in polynomial.terms.items()
            }
        except KeyError as exc:
            raise OperationError(f"{exc.args[0]} is not a generator of this graph") from exc

    def rows(self, polynomials: Iterable[FreePolynomial]) -> List[Dict[CodedMonomial, Any]]:
        return [self.encode(p) for p in polynomials]

    def monomial_count(self, degree: int) -> int:
        """Number of monomials of graded degree ``degree`` in T(E♯)."""
        while len(self._counts) <= degree:
            n = len(self._counts)
            self._counts.append(
                sum(
                    len(codes) * self._counts[n - d]
                    for d, codes in self.generators.items()
                    if d <= n
                )
            )
        return self._counts[degree]

    def _check_monomial_budget(self, degree: int) -> None:
        count = self.monomial_count(degree)
        if count > self.monomial_budget:
            raise BudgetExceededError(
                "monomials",
                degree,
                count,
                self.monomial_budget,
                hint="lower -N or raise --budget-monomials",
            )

    def monomials(self, degree: int) -> List[CodedMonomial]:
        """All coded monomials of the given degree, built by prepending generators."""
        if degree not in self._monomials:
            self._check_monomial_budget(degree)
            words: List[CodedMonomial] = []
            for d, codes in sorted(self.generators.items()):
                if d > degree:
                    continue
                tails = self.monomials(degree - d)
                for code in codes:
                    words.extend((code,) + tail for tail in tails)
            self._monomials[degree] = words
        return self._monomials[degree]

    def component(self, degree: int) -> RationalMatrix:
        """Echelon basis of the degree-``degree`` component of the ideal."""
        if degree in self._ideal:
            return self._ideal[degree]
        self._check_monomial_budget(degree)

        lower = {
            d: self.component(degree - d).basis_rows()
            for d in sorted(self.generators)
            if 0 < d <= degree
        }
        expected = sum(
            len(self.generators[d]) * len(rows) for d, rows in lower.items()
        ) + sum(
            len(relations) * self.monomial_count(degree - d)
            for d, relations in self.relations.items()
            if d <= degree
        )
        if expected > self.row_budget:
            raise BudgetExceededError("rows", degree, expected, self.row_budget)

        matrix = RationalMatrix(label=f"ideal degree {degree}")
        for d, rows in lower.items():
            for code in self.generators[d]:
                for row in rows:
                    matrix.add_row(_prepend(code, row))
        inherited = matrix.rank
        for d, relations in sorted(self.relations.items()):
            if d > degree:
                continue
            tails = self.monomials(degree - d)
            for relation in relations:
                for tail in tails:
                    matrix.add_row({key + tail: v for key, v in relation.items()})

        logger.info(
            f"Ideal degree {degree}: {matrix.rows_added} rows, rank {matrix.rank} "
            f"({inherited} from lower degrees), {self.monomial_count(degree)} monomials"
        )
        self._ideal[degree] = matrix
        return matrix

    def dimension(self, degree: int) -> int:
        """dim (T/I)_degree."""
        return self.monomial_count(degree) - self.component(degree).rank

    def decomposable(self, degree: int) -> RationalMatrix:
        """(T_+·I + I·T_+) in the given degree."""
        matrix = RationalMatrix(label=f"decomposables degree {degree}")
        lower = [
            (code, self.component(degree - d).basis_rows())
            for d, codes in sorted(self.generators.items())
            if 0 < d <= degree
            for code in codes
        ]
        for code, rows in lower:
            matrix.add_rows(_prepend(code, row) for row in rows)
        for code, rows in lower:
            matrix.add_rows(_append(row, code) for row in rows)
        return matrix

    def minimal_relations(self, degree: int) -> int:
        """Dimension of I_n modulo decomposables; zero without degree-n generators."""
        relations = self.relations.get(degree, [])
        if degree == 0 or not relations:
            return 0
        return self.decomposable(degree).rank_increase(relations)


def _ideal(
    graph: RankedDigraph,
    truncation: Optional[int],
    monomial_budget: int,
    row_budget: int,
) -> GradedIdeal:
    relations = [record.polynomial for record in relation_records(graph, truncation)]
    return GradedIdeal(graph, relations, monomial_budget, row_budget)


def graded_dimensions(
    graph: RankedDigraph,
    max_degree: int,
    truncation: Optional[int] = None,
    monomial_budget: int = MAX_MONOMIALS_PER_DEGREE,
    row_budget: int = MAX_ROWS_PER_DEGREE,
) -> List[int]:
    """
    dim A(Γ)_n for n = 0..max_degree (or of A(k, Γ) with ``truncation`` k).

    Raises:
        BudgetExceededError: Naming the first degree over budget
    """
    ideal = _ideal(graph, truncation, monomial_budget, row_budget)
    return [ideal.dimension(n) for n in range(max_degree + 1)]


def minimal_relation_series(
    graph: RankedDigraph,
    max_degree: int,
    truncation: Optional[int] = None,
    monomial_budget: int = MAX_MONOMIALS_PER_DEGREE,
    row_budget: int = MAX_ROWS_PER_DEGREE,
) -> List[int]:
    """r_n = dim R_n - dim (T_+·R + R·T_+)_n for n = 0..max_degree; r_0 = 0."""
    ideal = _ideal(graph, truncation, monomial_budget, row_budget)
    return [ideal.minimal_relations(n) for n in range(max_degree + 1)]


def generator_series(graph: RankedDigraph, max_degree: int) -> List[int]:
    """Coefficients of Σ_e Σ_{i=1}^{l(e)} z^i up to max_degree."""
    coefficients = [0] * (max_degree + 1)
    for generator in generators_of(graph):
        if generator.degree <= max_degree:
            coefficients[generator.degree] += 1
    return coefficients


def nci_check(
    graph: RankedDigraph,
    max_degree: int,
    monomial_budget: int = MAX_MONOMIALS_PER_DEGREE,
    row_budget: int = MAX_ROWS_PER_DEGREE,
) -> NciReport:
    """
    Noncommutative complete intersection test to order ``max_degree``.

    Passes when h(z)·(1 - g(z) + r(z)) = 1 up to z^max_degree, with g the
    generator series and r the minimal relation series.
    """
    require_ground_sink(graph)
    gens = generator_series(graph, max_degree)
    relations = minimal_relation_series(
        graph, max_degree, monomial_budget=monomial_budget, row_budget=row_budget
    )
    expansion = hilbert_series(graph, max_degree).expansion

    denominator = [
        (1 if n == 0 else 0) - gens[n] + relations[n] for n in range(max_degree + 1)
    ]
    product = expansion * TruncatedSeries(max_degree, tuple(denominator))
    witness = next(
        (n for n in range(max_degree + 1) if product[n] != (1 if n == 0 else 0)),
        None,
    )
    trimmed = list(denominator)
    while len(trimmed) > 1 and trimmed[-1] == 0:
        trimmed.pop()

    logger.info(f"NCI check to order {max_degree}: witness={witness}")
    return NciReport(
        is_nci=witness is None,
        max_degree=max_degree,
        generator_series=gens,
        relation_series=relations,
        hilbert_coefficients=expansion.to_list(),
        one_minus_g_plus_r=trimmed,
        witness=witness,
    )


def independence_check(
    graph: RankedDigraph,
    max_degree: int,
    monomial_budget: int = MAX_MONOMIALS_PER_DEGREE,
    row_budget: int = MAX_ROWS_PER_DEGREE,
) -> IndependenceReport:
    """
    ε(B(Γ)) against the ideal, degree by degree.

    A degree passes when the images of its basis words are independent
    modulo I_n and their number equals dim A_n, so they also span.
    """
    require_ground_sink(graph)
    ideal = _ideal(graph, None, monomial_budget, row_budget)
    words = enumerate_basis(graph, max_degree)
    coefficients = VertexCoefficients(graph)

    degrees: List[DegreeCheck] = []
    for n in range(max_degree + 1):
        images = [basis_word_to_free_poly(graph, w, coefficients) for w in words[n]]
        increase = ideal.component(n).rank_increase(ideal.rows(images))
        dimension = ideal.dimension(n)
        degrees.append(
            DegreeCheck(
                degree=n,
                count=len(images),
                dimension=dimension,
                independent=increase == len(images),
                passed=increase == len(images) == dimension,
            )
        )
    return IndependenceReport(
        passed=all(d.passed for d in degrees),
        dimensions=[d.dimension for d in degrees],
        degrees=degrees,
    )


def injection_check(
    graph: RankedDigraph,
    edge: str,
    position: int,
    max_degree: int,
    monomial_budget: int = MAX_MONOMIALS_PER_DEGREE,
    row_budget: int = MAX_ROWS_PER_DEGREE,
) -> InjectionReport:
    """
    Placing a vertex on ``edge``: ι maps B(Γ) injectively and R into R^w.

    For each degree n the images under ι̃ of the degree-n basis words of Γ
    must stay independent modulo the ideal of Γ^w, and every relation
    generator of Γ of degree n must map into that ideal.
    """
    require_ground_sink(graph)
    placed = place_vertex(graph, edge, position)
    refined = placed.graph
    mapping = add_vertex_map(
        graph,
        edge,
        position,
        first_name=str(placed.provenance.parameters["upper_edge"]),
        second_name=str(placed.provenance.parameters["lower_edge"]),
    )
    target_ideal = _ideal(refined, None, monomial_budget, row_budget)

    words = enumerate_basis(graph, max_degree)
    coefficients = VertexCoefficients(graph)
    relations = relations_by_degree(relation_records(graph))

    degrees: List[DegreeCheck] = []
    relations_preserved = True
    for n in range(max_degree + 1):
        component = target_ideal.component(n)
        images = [
            apply_generator_map(mapping, basis_word_to_free_poly(graph, w, coefficients))
            for w in words[n]
        ]
        increase = component.rank_increase(target_ideal.rows(images))
        contained = all(
            component.contains(target_ideal.encode(apply_generator_map(mapping, r)))
            for r in relations.get(n, [])
        )
        relations_preserved = relations_preserved and contained
        degrees.append(
            DegreeCheck(
                degree=n,
                count=len(images),
                dimension=target_ideal.dimension(n),
                independent=increase == len(images),
                passed=increase == len(images) and contained,
            )
        )
    return InjectionReport(
        edge=edge,
        position=position,
        passed=all(d.passed for d in degrees),
        relations_preserved=relations_preserved,
        degrees=degrees,
    )


def ideal_equality_check(
    graph: RankedDigraph,
    max_degree: int,
    monomial_budget: int = MAX_MONOMIALS_PER_DEGREE,
    row_budget: int = MAX_ROWS_PER_DEGREE,
) -> IdealEqualityReport:
    """Reference-path and all-pairs generating sets span the same ideal components."""
    reference = _ideal(graph, None, monomial_budget, row_budget)
    all_pairs = GradedIdeal(
        graph,
        [record.polynomial for record in all_pairs_relation_generators(graph)],
        monomial_budget,
        row_budget,
    )
    equal_degrees: List[bool] = []
    for n in range(max_degree + 1):
        first = reference.component(n)
        second = all_pairs.component(n)
        equal_degrees.append(
            first.rank == second.rank
            and first.rank_increase(second.basis_rows()) == 0
        )
    return IdealEqualityReport(
        passed=all(equal_degrees),
        equal_by_degree=equal_degrees,
        reference_dimensions=[reference.component(n).rank for n in range(max_degree + 1)],
    )
