# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Unit tests for the basis service."""

import pytest

from glg.errors import PathError
from glg.models.domain.basis_word import BasisWord
from glg.models.domain.free_polynomial import FreePolynomial
from glg.services.basis import (
    LetterAlphabet,
    basis_word_to_free_poly,
    count_basis,
    count_basis_by_vertex,
    enumerate_basis,
    is_basis_word,
)
from glg.services.generators import gen_delta
from glg.services.hilbert import hilbert_series


class TestLetterAlphabet:
    """Tests for letters and covers."""

    def test_orbit_letters(self, orbit_graph):
        # Act
        alphabet = LetterAlphabet(orbit_graph)

        # Assert
        assert alphabet.letters == [
            ("a", 1),
            ("a", 2),
            ("a", 3),
            ("b", 1),
            ("b", 2),
            ("c", 1),
        ]

    def test_covers(self, orbit_graph):
        # Arrange
        alphabet = LetterAlphabet(orbit_graph)

        # Act & Assert
        assert alphabet.covers(("a", 1), ("b", 1))
        assert alphabet.covers(("a", 2), ("c", 1))
        assert not alphabet.covers(("a", 1), ("c", 1))
        assert not alphabet.covers(("b", 1), ("c", 1))


class TestBasisWords:
    """Tests for membership and enumeration."""

    @pytest.mark.parametrize(
        "letters, expected",
        [
            ((), True),
            ((("b", 1), ("a", 1)), True),
            ((("a", 1), ("b", 1)), False),
            ((("a", 4),), False),
            ((("*", 1),), False),
            ((("a", 2), ("b", 2)), True),
        ],
    )
    def test_is_basis_word(self, orbit_graph, letters, expected):
        # Act & Assert
        assert is_basis_word(orbit_graph, BasisWord(letters)) is expected

    def test_enumerate_low_degrees(self, orbit_graph):
        # Act
        words = enumerate_basis(orbit_graph, 2)

        # Assert
        assert words[0] == [BasisWord()]
        assert [str(w) for w in words[1]] == ["(a,1)", "(b,1)", "(c,1)"]
        assert len(words[2]) == 10
        assert BasisWord((("a", 1), ("b", 1))) not in words[2]

    def test_enumeration_matches_counts(self, orbit_graph):
        # Act
        words = enumerate_basis(orbit_graph, 4)

        # Assert
        assert [len(w) for w in words] == count_basis(orbit_graph, 4)
        assert all(is_basis_word(orbit_graph, w) for w in words[3])


class TestCounts:
    """Tests for count_basis and count_basis_by_vertex."""

    def test_orbit_counts(self, orbit_graph):
        # Act & Assert
        assert count_basis(orbit_graph, 4) == [1, 3, 10, 32, 103]

    def test_delta_two_is_fibonacci(self):
        # Act & Assert
        assert count_basis(gen_delta(2), 5) == [1, 1, 2, 3, 5, 8]

    def test_counts_match_hilbert_series(self, suite_factory):
        # Arrange
        for _, graph in suite_factory.small_suite():
            # Act
            counts = count_basis(graph, 6)

            # Assert
            assert counts == hilbert_series(graph, 6).expansion.to_list()

    def test_by_vertex_sums_to_total(self, orbit_graph):
        # Act
        by_vertex = count_basis_by_vertex(orbit_graph, 5)
        total = count_basis(orbit_graph, 5)

        # Assert
        assert sorted(by_vertex) == ["a", "b", "c"]
        for n in range(6):
            assert (1 if n == 0 else 0) + sum(s[n] for s in by_vertex.values()) == total[n]

    def test_by_vertex_on_delta(self):
        # Act & Assert
        assert count_basis_by_vertex(gen_delta(2), 4) == {"max": [0, 1, 2, 3, 5]}


class TestWordImages:
    """Tests for ε(word)."""

    def test_empty_word_is_one(self, orbit_graph):
        # Act & Assert
        assert basis_word_to_free_poly(orbit_graph, BasisWord()) == FreePolynomial.one()

    def test_product_of_vertex_coefficients(self, orbit_graph):
        # Arrange
        word = BasisWord((("c", 1), ("b", 2)))

        # Act
        image = basis_word_to_free_poly(orbit_graph, word)

        # Assert
        assert image == FreePolynomial.generator("e4", 1) * FreePolynomial.generator("e3", 2)

    def test_unknown_vertex(self, orbit_graph):
        # Act & Assert
        with pytest.raises(PathError):
            basis_word_to_free_poly(orbit_graph, BasisWord((("zz", 1),)))
