# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Unit tests for algebra tools."""

import pytest

from glg.errors import GraphValidationError
from glg.services.generators import gen_chain, gen_delta
from glg.tests.builders.ranked_digraph_builder import a_graph
from glg.tools.algebra_tools import (
    basis_tool,
    hilbert_tool,
    moebius_tool,
    mseries_tool,
    relations_tool,
)


class TestMoebiusTool:
    """Tests for moebius_tool."""

    def test_orbit_pairs(self, orbit_graph):
        # Act
        result = moebius_tool(orbit_graph)

        # Assert
        assert result["pair_count"] == 9
        values = {(p["upper"], p["lower"]): p["mu"] for p in result["pairs"]}
        assert values[("a", "a")] == 1
        assert values[("a", "b")] == -1
        assert values[("b", "*")] == -1
        assert values[("a", "*")] == 1
        assert ("b", "c") not in values


class TestMSeriesTool:
    """Tests for mseries_tool."""

    def test_orbit(self, orbit_graph):
        # Act
        result = mseries_tool(orbit_graph)

        # Assert
        assert result["m_series"] == [4, -2, -2, 1]
        assert result["m_lower"] == [1, -1, -1, 1]
        assert result["m_upper"] == [1, -1, -1, 1]

    def test_omits_upper_without_unique_maximum(self):
        # Arrange
        graph = (
            a_graph()
            .with_vertex("x", 1)
            .with_vertex("y", 1)
            .with_vertex("bottom", 0)
            .with_edge("x", "bottom", "f")
            .with_edge("y", "bottom", "g")
            .build()
        )

        # Act
        result = mseries_tool(graph)

        # Assert
        assert result["m_upper"] is None
        assert result["m_lower"] == [1, -2]


class TestHilbertTool:
    """Tests for hilbert_tool."""

    def test_orbit_unreduced(self, orbit_graph):
        # Act
        result = hilbert_tool(orbit_graph, 4)

        # Assert
        assert result["coeffs"] == [1, 3, 10, 32, 103]
        assert result["num"] == [1, -1]
        assert result["den"] == [1, -4, 2, 2, -1]
        assert result["reduced"] is False
        assert result["order"] == 4
        assert result["tree_formula"] is None

    def test_orbit_reduced(self, orbit_graph):
        # Act
        result = hilbert_tool(orbit_graph, 4, reduce=True)

        # Assert
        assert result["num"] == [1]
        assert result["den"] == [1, -3, -1, 1]
        assert result["coeffs"] == [1, 3, 10, 32, 103]

    def test_tree_formula_for_chains(self):
        # Act
        result = hilbert_tool(gen_chain([1, 2]), 4)

        # Assert
        assert result["coeffs"] == [1, 2, 5, 12, 29]
        assert result["tree_formula"]["coeffs"] == [1, 2, 5, 12, 29]
        assert result["tree_formula"]["order"] == 4

    def test_needs_ground_sink(self):
        # Arrange
        graph = a_graph().with_vertices(x=2, y=1).with_edge("x", "y").build()

        # Act & Assert
        with pytest.raises(GraphValidationError):
            hilbert_tool(graph, 3)


class TestBasisTool:
    """Tests for basis_tool."""

    def test_counts_without_words(self, orbit_graph):
        # Act
        result = basis_tool(orbit_graph, 3)

        # Assert
        assert result["counts"] == [1, 3, 10, 32]
        assert sorted(result["by_vertex"]) == ["a", "b", "c"]
        assert result["words"] is None

    def test_words_listed_by_degree(self):
        # Act
        result = basis_tool(gen_delta(2), 3, words=True)

        # Assert
        assert [len(words) for words in result["words"]] == result["counts"]
        assert result["counts"] == [1, 1, 2, 3]
        assert result["words"][1] == ["(max,1)"]


class TestRelationsTool:
    """Tests for relations_tool."""

    def test_orbit_relations(self, orbit_graph):
        # Act
        result = relations_tool(orbit_graph)

        # Assert
        assert result["count"] == 3
        assert result["by_degree"] == {"1": 1, "2": 1, "3": 1}
        first = result["relations"][0]
        assert first["source"] == "a"
        assert first["target"] == "*"
        assert first["reference_path"] == ["e1", "e3"]
        assert first["other_path"] == ["e2", "e4"]

    def test_truncation(self, orbit_graph):
        # Act
        result = relations_tool(orbit_graph, truncation=2)

        # Assert
        assert result["truncation"] == 2
        assert result["by_degree"] == {"1": 1}

    def test_tree_has_none(self):
        # Act
        result = relations_tool(gen_delta(3))

        # Assert
        assert result["count"] == 0
        assert result["relations"] == []
