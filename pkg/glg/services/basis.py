# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Basis service - the monomial basis B(Γ) and its graded counts.

A letter is (v, k) with v non-minimal and 1 <= k <= |v|. A word is in B(Γ)
when no adjacent pair (v, k)(w, l) is a cover, i.e. v > w and k = |v| - |w|.
"""

import logging
from typing import Dict, List, Optional

from glg.errors import PathError
from glg.models.domain.basis_word import BasisWord, Letter
from glg.models.domain.free_polynomial import FreePolynomial
from glg.models.domain.ranked_digraph import RankedDigraph
from glg.models.domain.reachability import Reachability
from glg.services.path_polynomials import VertexCoefficients
from glg.services.reachability import reachability, require_ground_sink

logger = logging.getLogger(__name__)


class LetterAlphabet:
    """Letters of B(Γ) and the cover relation between them."""

    def __init__(self, graph: RankedDigraph, reach: Optional[Reachability] = None) -> None:
        self.graph = graph
        self.bottom = require_ground_sink(graph)
        self.reach = reach or reachability(graph)
        self.letters: List[Letter] = [
            (vertex, k)
            for vertex in graph.vertex_names
            if vertex != self.bottom
            for k in range(1, graph.rank(vertex) + 1)
        ]

    def covers(self, first: Letter, second: Letter) -> bool:
        """(v, k) ⋗ (w, l): v > w and k = |v| - |w|."""
        upper, k = first
        lower, _ = second
        return (
            self.reach.reaches(upper, lower)
            and k == self.graph.rank(upper) - self.graph.rank(lower)
        )

    def is_letter(self, letter: Letter) -> bool:
        vertex, k = letter
        return (
            self.graph.has_vertex(vertex)
            and vertex != self.bottom
            and 1 <= k <= self.graph.rank(vertex)
        )


def is_basis_word(graph: RankedDigraph, word: BasisWord) -> bool:
    alphabet = LetterAlphabet(graph)
    if not all(alphabet.is_letter(letter) for letter in word.letters):
        return False
    return not any(
        alphabet.covers(a, b) for a, b in zip(word.letters, word.letters[1:])
    )


def enumerate_basis(graph: RankedDigraph, max_degree: int) -> List[List[BasisWord]]:
    """
    Words of B(Γ) by graded degree 0..max_degree, each degree sorted.

    Degree 0 holds only the empty word.
    """
    alphabet = LetterAlphabet(graph)
    by_degree: List[List[BasisWord]] = [[BasisWord()]]
    for degree in range(1, max_degree + 1):
        words: List[BasisWord] = []
        for letter in alphabet.letters:
            k = letter[1]
            if k > degree:
                continue
            for prefix in by_degree[degree - k]:
                if prefix.letters and alphabet.covers(prefix.letters[-1], letter):
                    continue
                words.append(BasisWord(prefix.letters + (letter,)))
        words.sort()
        by_degree.append(words)
    logger.debug(f"Enumerated basis words: {[len(w) for w in by_degree]}")
    return by_degree


def count_basis(graph: RankedDigraph, max_degree: int) -> List[int]:
    """
    |B(Γ)_n| for n = 0..max_degree by dynamic programming on the last letter.

    ending[n][x] counts words of degree n ending in letter x.
    """
    alphabet = LetterAlphabet(graph)
    letters = alphabet.letters
    allowed = {
        x: [y for y in letters if not alphabet.covers(y, x)] for x in letters
    }
    ending: List[Dict[Letter, int]] = [{x: 0 for x in letters}]
    counts = [1]
    for degree in range(1, max_degree + 1):
        row: Dict[Letter, int] = {}
        for x in letters:
            k = x[1]
            if k > degree:
                row[x] = 0
                continue
            previous = ending[degree - k]
            row[x] = (1 if k == degree else 0) + sum(previous[y] for y in allowed[x])
        ending.append(row)
        counts.append(sum(row.values()))
    return counts


def count_basis_by_vertex(graph: RankedDigraph, max_degree: int) -> Dict[str, List[int]]:
    """
    Series h_v of basis words whose first letter sits at v, for each non-minimal v.

    1 + Σ_v h_v equals :func:`count_basis`.
    """
    alphabet = LetterAlphabet(graph)
    letters = alphabet.letters
    allowed = {
        x: [y for y in letters if not alphabet.covers(x, y)] for x in letters
    }
    starting: List[Dict[Letter, int]] = [{x: 0 for x in letters}]
    for degree in range(1, max_degree + 1):
        row: Dict[Letter, int] = {}
        for x in letters:
            k = x[1]
            if k > degree:
                row[x] = 0
                continue
            rest = starting[degree - k]
            row[x] = (1 if k == degree else 0) + sum(rest[y] for y in allowed[x])
        starting.append(row)

    by_vertex: Dict[str, List[int]] = {}
    for vertex in graph.vertex_names:
        if vertex == alphabet.bottom:
            continue
        by_vertex[vertex] = [
            sum(count for (v, _), count in starting[n].items() if v == vertex)
            for n in range(max_degree + 1)
        ]
    return by_vertex


def basis_word_to_free_poly(
    graph: RankedDigraph,
    word: BasisWord,
    coefficients: Optional[VertexCoefficients] = None,
) -> FreePolynomial:
    """
    ε(word) = e(v1, k1)···e(vr, kr); the empty word maps to 1.

    Raises:
        PathError: If a letter is not a letter of B(Γ)
    """
    coefficients = coefficients or VertexCoefficients(graph)
    result = FreePolynomial.one()
    for vertex, k in word.letters:
        if not graph.has_vertex(vertex):
            raise PathError(f"unknown vertex {vertex!r} in word {word}")
        result = result * coefficients.coeff(vertex, k)
    return result

