# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Unit tests for the Möbius service."""

import pytest

from glg.errors import ExtremalVertexError
from glg.models.domain.series import IntPolynomial
from glg.services.generators import gen_chain, gen_delta
from glg.services.moebius import (
    chain_moebius,
    iter_chains,
    m_lower,
    m_series,
    m_upper,
    moebius_polynomial,
    moebius_table,
)
from glg.services.reachability import reachability
from glg.tests.builders.ranked_digraph_builder import a_graph, parallel_edges


class TestMoebiusTable:
    """Tests for moebius_table."""

    def test_orbit_values(self, orbit_graph):
        # Act
        table = moebius_table(orbit_graph)

        # Assert
        assert [table.mu(v, v) for v in orbit_graph.vertex_names] == [1, 1, 1, 1]
        assert table.mu("a", "b") == -1
        assert table.mu("a", "c") == -1
        assert table.mu("a", "*") == 1
        assert table.mu("b", "c") == 0
        assert table.pair_count() == 9

    def test_multi_edges_do_not_change_mu(self):
        # Act
        table = moebius_table(parallel_edges(count=3).build())

        # Assert
        assert table.mu("v", "w") == -1

    def test_agrees_with_chain_sum(self, orbit_graph):
        # Arrange
        table = moebius_table(orbit_graph)
        reach = reachability(orbit_graph)

        # Act & Assert
        for upper, lower, value in table.pairs():
            assert chain_moebius(orbit_graph, upper, lower, reach) == value

    def test_zeta_times_mu_is_identity(self, orbit_graph):
        # Arrange
        table = moebius_table(orbit_graph)
        reach = reachability(orbit_graph)
        names = orbit_graph.vertex_names

        # Act & Assert
        for v in names:
            for w in names:
                total = sum(
                    table.mu(v, u) for u in names if reach.at_least(v, u) and reach.at_least(u, w)
                )
                assert total == (1 if v == w else 0)


class TestChains:
    """Tests for chain enumeration."""

    def test_chains_between_extremes(self, orbit_graph):
        # Act
        chains = list(iter_chains(reachability(orbit_graph), "a", "*"))

        # Assert
        assert sorted(chains) == [("a", "*"), ("a", "b", "*"), ("a", "c", "*")]

    def test_incomparable_pair_has_no_chains(self, orbit_graph):
        # Act & Assert
        assert list(iter_chains(reachability(orbit_graph), "b", "c")) == []


class TestMoebiusPolynomials:
    """Tests for M, M_lower and M_upper."""

    def test_orbit_m_series(self, orbit_graph):
        # Act & Assert
        assert m_series(orbit_graph) == IntPolynomial.of(4, -2, -2, 1)

    def test_orbit_lower_and_upper(self, orbit_graph):
        # Act & Assert
        assert m_lower(orbit_graph) == IntPolynomial.of(1, -1, -1, 1)
        assert m_upper(orbit_graph) == IntPolynomial.of(1, -1, -1, 1)

    @pytest.mark.parametrize("length", [1, 2, 5])
    def test_delta(self, length):
        # Act
        moebius = m_series(gen_delta(length))

        # Assert
        assert moebius == IntPolynomial.of(2) - IntPolynomial.monomial(length)

    def test_chain(self):
        # Act & Assert
        assert m_series(gen_chain([1, 2])) == IntPolynomial.of(3, -1, -1)

    def test_value_at_one_is_one_for_bounded_order(self, orbit_graph):
        # Act & Assert
        assert m_series(orbit_graph).value_at_one() == 1

    def test_requires_unique_minimal_vertex(self):
        # Arrange
        graph = (
            a_graph()
            .with_vertices(t=1, x=0, y=0)
            .with_edge("t", "x")
            .with_edge("t", "y")
            .build()
        )

        # Act & Assert
        with pytest.raises(ExtremalVertexError):
            m_series(graph)
        assert moebius_polynomial(graph) == IntPolynomial.of(3, -2)

    def test_upper_requires_unique_maximal_vertex(self):
        # Arrange
        graph = (
            a_graph()
            .with_vertices(x=1, y=1, s=0)
            .with_edge("x", "s")
            .with_edge("y", "s")
            .build()
        )

        # Act & Assert
        assert m_lower(graph) == IntPolynomial.of(1, -2)
        with pytest.raises(ExtremalVertexError):
            m_upper(graph)
