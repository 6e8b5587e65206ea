# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Unit tests for BasisWord, MoebiusTable, PathPoly and the option models."""

import pytest
from pydantic import ValidationError

from glg.models.command_config import CommandConfig
from glg.models.domain.basis_word import BasisWord
from glg.models.domain.free_polynomial import FreePolynomial
from glg.models.domain.moebius_table import MoebiusTable
from glg.models.domain.path_poly import PathPoly
from glg.models.responses.error_response import ErrorResponse


class TestBasisWord:
    """Tests for BasisWord."""

    def test_degree_sums_indices(self):
        # Act
        word = BasisWord((("a", 2), ("b", 1)))

        # Assert
        assert word.degree == 3
        assert len(word) == 2
        assert str(word) == "(a,2)(b,1)"
        assert word.to_list() == [["a", 2], ["b", 1]]

    def test_empty_word(self):
        # Act
        word = BasisWord()

        # Assert
        assert word.degree == 0
        assert str(word) == "()"


class TestMoebiusTable:
    """Tests for MoebiusTable."""

    def test_lookup_and_pairs(self):
        # Arrange
        table = MoebiusTable(values={"u": {"u": 1, "v": -1}, "v": {"v": 1}})

        # Act & Assert
        assert table.mu("u", "v") == -1
        assert table.mu("v", "u") == 0
        assert table.pair_count() == 3
        assert list(table.pairs()) == [("u", "u", 1), ("u", "v", -1), ("v", "v", 1)]


class TestPathPoly:
    """Tests for PathPoly convolution."""

    def test_convolve_multiplies_polynomials(self):
        # Arrange
        x, y = FreePolynomial.generator("e", 1), FreePolynomial.generator("f", 1)
        first = PathPoly(("e",), (FreePolynomial.one(), x))
        second = PathPoly(("f",), (FreePolynomial.one(), y))

        # Act
        combined = first.convolve(second)

        # Assert
        assert combined.path == ("e", "f")
        assert combined.length == 2
        assert combined.coefficient(1) == x + y
        assert combined.coefficient(2) == x * y
        assert combined.coefficient(3).is_zero()


class TestCommandConfig:
    """Tests for CommandConfig."""

    def test_defaults(self):
        # Act
        config = CommandConfig(command="hilbert", max_degree=10)

        # Assert
        assert config.output_format == "json"
        assert config.seed == 0
        assert config.truncate_relations is None

    def test_rejects_negative_degree(self):
        # Act & Assert
        with pytest.raises(ValidationError):
            CommandConfig(command="hilbert", max_degree=-1)

    def test_rejects_unknown_format(self):
        # Act & Assert
        with pytest.raises(ValidationError):
            CommandConfig(command="hilbert", max_degree=1, output_format="xml")

    def test_rejects_zero_budget_and_truncation(self):
        # Act & Assert
        with pytest.raises(ValidationError):
            CommandConfig(command="oracle", max_degree=1, monomial_budget=0)
        with pytest.raises(ValidationError):
            CommandConfig(command="oracle", max_degree=1, truncate_relations=0)


class TestErrorResponse:
    """Tests for ErrorResponse model."""

    def test_creates_with_error(self):
        # Act
        response = ErrorResponse(error="Something went wrong")

        # Assert
        assert response.error == "Something went wrong"
        assert response.command is None
        assert response.details is None

    def test_accepts_optional_fields(self):
        # Act
        response = ErrorResponse(error="Error", command="hilbert", details="GraphParseError")

        # Assert
        assert response.command == "hilbert"
        assert response.details == "GraphParseError"
