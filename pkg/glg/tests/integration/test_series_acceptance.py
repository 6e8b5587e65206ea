# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""
Integration tests for the Hilbert series.

Three independent computations of dim A_n are compared: the Möbius closed
form, the count of basis words and the rank of the ideal by linear algebra.
"""

import pytest

from glg.services.basis import count_basis, enumerate_basis, is_basis_word
from glg.services.hilbert import (
    hilbert_series,
    hilbert_series_from_chains,
    hilbert_tree,
)
from glg.services.oracle import graded_dimensions
from glg.services.relations import relation_generators
from glg.tests.factories.graph_suite_factory import GraphSuiteFactory

SMALL_SUITE = GraphSuiteFactory.small_suite()
RANDOM_DAGS = GraphSuiteFactory.random_dags(10, vertex_count=6)
RANDOM_TREES = GraphSuiteFactory.random_trees(10)


def recurrence(order: int) -> list:
    """Coefficients of 1 / (1 - 3z - z^2 + z^3) by the linear recurrence."""
    values = [1, 3, 10]
    while len(values) <= order:
        values.append(3 * values[-1] + values[-2] - values[-3])
    return values[: order + 1]


def enumerable_degree(counts: list, word_limit: int = 40_000) -> int:
    """Largest degree whose words, together with all lower ones, stay under the limit."""
    total = 0
    for degree, count in enumerate(counts):
        total += count
        if total > word_limit:
            return degree - 1
    return len(counts) - 1


@pytest.mark.integration
class TestOrbitSeries:
    """Tests for the orbit graph of a transposition."""

    def test_expansion_to_order_ten(self, orbit_graph):
        # Act
        series = hilbert_series(orbit_graph, 10)

        # Assert
        assert series.expansion.to_list() == recurrence(10)
        assert series.expansion.to_list()[-1] == 113578

    def test_chain_sum_agrees(self, orbit_graph):
        # Act
        from_chains = hilbert_series_from_chains(orbit_graph, 10)

        # Assert
        assert from_chains.expansion == hilbert_series(orbit_graph, 10).expansion


@pytest.mark.integration
class TestTripleAgreement:
    """Tests that series, basis and oracle give the same dimensions."""

    @pytest.mark.parametrize("name,graph", SMALL_SUITE, ids=[n for n, _ in SMALL_SUITE])
    def test_small_suite_to_degree_five(self, name, graph):
        # Act
        series = hilbert_series(graph, 5).expansion.to_list()

        # Assert
        assert count_basis(graph, 5) == series, name
        assert graded_dimensions(graph, 5) == series, name

    @pytest.mark.parametrize("name,graph", RANDOM_DAGS, ids=[n for n, _ in RANDOM_DAGS])
    def test_random_graphs_to_degree_five(self, name, graph):
        # Act
        series = hilbert_series(graph, 5).expansion.to_list()

        # Assert
        assert count_basis(graph, 5) == series, name
        assert graded_dimensions(graph, 5) == series, name
        assert hilbert_series_from_chains(graph, 6).expansion == hilbert_series(
            graph, 6
        ).expansion


@pytest.mark.integration
class TestRootedTrees:
    """Tests for the closed form on rooted trees."""

    @pytest.mark.parametrize("name,graph", RANDOM_TREES, ids=[n for n, _ in RANDOM_TREES])
    def test_tree_formula(self, name, graph):
        # Act
        closed_form = hilbert_tree(graph).expand(10)

        # Assert
        assert closed_form == hilbert_series(graph, 10).expansion
        assert relation_generators(graph) == []
        assert count_basis(graph, 6) == closed_form.to_list()[:7]


@pytest.mark.integration
class TestBasisEnumeration:
    """Tests that listing B(Γ) agrees with counting it."""

    @pytest.mark.parametrize(
        "name,graph", SMALL_SUITE + RANDOM_DAGS, ids=[n for n, _ in SMALL_SUITE + RANDOM_DAGS]
    )
    def test_enumeration_matches_counts(self, name, graph):
        # Arrange
        counts = count_basis(graph, 8)
        top = enumerable_degree(counts)

        # Act
        words = enumerate_basis(graph, top)

        # Assert
        assert top >= 4, name
        assert [len(w) for w in words] == counts[: top + 1], name
        assert len(set(words[top])) == len(words[top])
        assert all(is_basis_word(graph, w) for w in words[min(top, 3)])
