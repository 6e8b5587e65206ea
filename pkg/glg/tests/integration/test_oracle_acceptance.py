# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Integration tests for the linear-algebra oracle and the identity suite."""

import pytest

from glg.services.generators import gen_chain, gen_delta
from glg.services.graph_operations import add_vertex, double_bouquet
from glg.services.identity_checks import check_identities
from glg.services.oracle import (
    ideal_equality_check,
    independence_check,
    injection_check,
    nci_check,
)
from glg.tests.factories.graph_suite_factory import GraphSuiteFactory

SUITE = GraphSuiteFactory.small_suite() + GraphSuiteFactory.random_dags(10)
SUITE_IDS = [n for n, _ in SUITE]

# Every legal single vertex placement on the shared graphs
PLACEMENTS = [
    (name, graph, edge.name, position)
    for name, graph in SUITE
    for edge in graph.edges
    for position in range(1, graph.length(edge))
]

# Trees whose maximal vertex sits at rank 3
TOP_THREE = [
    ("delta3", gen_delta(3)),
    ("chain12", gen_chain([1, 2])),
    ("chain21", gen_chain([2, 1])),
    ("chain111", gen_chain([1, 1, 1])),
]


@pytest.mark.integration
class TestOrbitNci:
    """Tests for the NCI property of the orbit graph."""

    def test_to_degree_five(self, orbit_graph):
        # Act
        report = nci_check(orbit_graph, 5)

        # Assert
        assert report.is_nci
        assert report.relation_series == [0, 1, 1, 1, 0, 0]
        assert report.hilbert_coefficients == [1, 3, 10, 32, 103, 331]

    @pytest.mark.slow
    def test_to_degree_eight(self, orbit_graph):
        # Act
        report = nci_check(orbit_graph, 8)

        # Assert
        assert report.is_nci
        assert report.witness is None
        assert report.relation_series == [0, 1, 1, 1, 0, 0, 0, 0, 0]
        assert report.one_minus_g_plus_r == [1, -3, -1, 1]


@pytest.mark.integration
class TestDoubleBouquetNci:
    """Tests that double bouquets of trees are NCI."""

    @pytest.mark.parametrize(
        "first,second",
        [
            (TOP_THREE[i], TOP_THREE[j])
            for i in range(len(TOP_THREE))
            for j in range(i + 1, len(TOP_THREE))
        ],
        ids=lambda pair: pair[0],
    )
    def test_pairs_with_matching_top_rank(self, first, second):
        # Arrange
        graph = double_bouquet(first[1], second[1]).graph

        # Act
        report = nci_check(graph, 4)

        # Assert
        assert report.is_nci, f"{first[0]} and {second[0]}: witness {report.witness}"

    def test_delta_and_chain_of_height_two(self):
        # Arrange
        graph = double_bouquet(gen_delta(2), gen_chain([1, 1])).graph

        # Act
        report = nci_check(graph, 5)

        # Assert
        assert report.is_nci
        assert report.hilbert_coefficients == [1, 2, 4, 8, 16, 32]


@pytest.mark.integration
class TestBasisAndInjection:
    """Tests that B(Γ) is a basis and that refining an edge injects."""

    @pytest.mark.parametrize("name,graph", SUITE, ids=SUITE_IDS)
    def test_basis_is_independent(self, name, graph):
        # Act
        report = independence_check(graph, 4)

        # Assert
        assert report.passed, name

    @pytest.mark.parametrize(
        "name,graph,edge,position",
        PLACEMENTS,
        ids=[f"{n}-{e}-{p}" for n, _, e, p in PLACEMENTS],
    )
    def test_refined_graph_keeps_basis(self, name, graph, edge, position):
        # Act
        refined = add_vertex(graph, edge, position).graph

        # Assert
        assert independence_check(refined, 4).passed

    @pytest.mark.parametrize(
        "name,graph,edge,position",
        PLACEMENTS,
        ids=[f"{n}-{e}-{p}" for n, _, e, p in PLACEMENTS],
    )
    def test_injection(self, name, graph, edge, position):
        # Act
        report = injection_check(graph, edge, position, 3)

        # Assert
        assert report.passed
        assert report.relations_preserved

    def test_all_pairs_ideal_matches_reference_ideal(self, orbit_graph):
        # Act
        report = ideal_equality_check(orbit_graph, 4)

        # Assert
        assert report.passed
        assert all(report.equal_by_degree)


@pytest.mark.integration
class TestIdentitySuite:
    """Tests for the identity suite over the shared graphs."""

    @pytest.mark.parametrize("name,graph", SUITE, ids=SUITE_IDS)
    def test_each_graph_passes(self, name, graph):
        # Act
        report = check_identities([graph], [name], max_degree=3)

        # Assert
        failures = [f for identity in report.identities for f in identity.failures]
        assert report.passed, failures

    def test_orbit_with_delta(self, orbit_graph):
        # Act
        report = check_identities([orbit_graph, gen_delta(3)], max_degree=4)

        # Assert
        assert report.passed
