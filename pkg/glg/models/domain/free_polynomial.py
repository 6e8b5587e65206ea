# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""FreePolynomial model - noncommutative polynomials in the edge generators a_i(e)."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Tuple, Union

Scalar = Union[int, Fraction]


@dataclass(frozen=True, order=True, slots=True)
class Generator:
    """a_index(edge); graded degree is the index."""

    edge: str
    index: int

    @property
    def degree(self) -> int:
        return self.index

    def __str__(self) -> str:
        return f"a{self.index}({self.edge})"


# A word in the generators; the empty tuple is the unit monomial.
Monomial = Tuple[Generator, ...]


def monomial_degree(monomial: Monomial) -> int:
    return sum(generator.index for generator in monomial)


def format_monomial(monomial: Monomial) -> str:
    return "*".join(str(generator) for generator in monomial) if monomial else "1"


def _format_scalar(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else str(value)


class FreePolynomial:
    """Element of the free associative algebra over Q on the generators.

    Treated as immutable: every operation returns a new polynomial. Zero
    coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[Monomial, Scalar], None] = None) -> None:
        cleaned: Dict[Monomial, Fraction] = {}
        for monomial, coefficient in (terms or {}).items():
            value = Fraction(coefficient)
            if value:
                cleaned[tuple(monomial)] = value
        self._terms = cleaned

    @classmethod
    def zero(cls) -> "FreePolynomial":
        return cls()

    @classmethod
    def one(cls) -> "FreePolynomial":
        return cls({(): 1})

    @classmethod
    def generator(cls, edge: str, index: int) -> "FreePolynomial":
        return cls({(Generator(edge, index),): 1})

    @classmethod
    def from_monomial(cls, monomial: Monomial, coefficient: Scalar = 1) -> "FreePolynomial":
        return cls({monomial: coefficient})

    @classmethod
    def add_all(cls, polynomials: Iterable["FreePolynomial"]) -> "FreePolynomial":
        total: Dict[Monomial, Fraction] = {}
        for polynomial in polynomials:
            for monomial, coefficient in polynomial._terms.items():
                total[monomial] = total.get(monomial, Fraction(0)) + coefficient
        return cls(total)

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        """Terms ordered by (degree, monomial)."""
        for monomial in sorted(self._terms, key=lambda m: (monomial_degree(m), m)):
            yield monomial, self._terms[monomial]

    def monomials(self) -> List[Monomial]:
        return [monomial for monomial, _ in self.items()]

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self._terms.get(tuple(monomial), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> List[int]:
        """Sorted distinct graded degrees of the monomials present."""
        return sorted({monomial_degree(m) for m in self._terms})

    def is_homogeneous(self, degree: Union[int, None] = None) -> bool:
        found = self.degrees()
        if not found:
            return True
        if len(found) != 1:
            return False
        return degree is None or found[0] == degree

    def homogeneous_component(self, degree: int) -> "FreePolynomial":
        return FreePolynomial(
            {m: c for m, c in self._terms.items() if monomial_degree(m) == degree}
        )

    def __add__(self, other: "FreePolynomial") -> "FreePolynomial":
        return FreePolynomial.add_all((self, other))

    def __neg__(self) -> "FreePolynomial":
        return FreePolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "FreePolynomial") -> "FreePolynomial":
        return self + (-other)

    def scale(self, factor: Scalar) -> "FreePolynomial":
        return FreePolynomial({m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other: Union["FreePolynomial", int, Fraction]) -> "FreePolynomial":
        if not isinstance(other, FreePolynomial):
            return self.scale(other)
        product: Dict[Monomial, Fraction] = {}
        for left, a in self._terms.items():
            for right, b in other._terms.items():
                word = left + right
                product[word] = product.get(word, Fraction(0)) + a * b
        return FreePolynomial(product)

    def __rmul__(self, other: Union[int, Fraction]) -> "FreePolynomial":
        return self.scale(other)

    def substitute(
        self, image: Callable[[Generator], "FreePolynomial"]
    ) -> "FreePolynomial":
        """Apply a generator substitution, extended multiplicatively and linearly."""
        cache: Dict[Generator, FreePolynomial] = {}
        parts: List[FreePolynomial] = []
        for monomial, coefficient in self._terms.items():
            value = FreePolynomial({(): coefficient})
            for generator in monomial:
                if generator not in cache:
                    cache[generator] = image(generator)
                value = value * cache[generator]
                if value.is_zero():
                    break
            parts.append(value)
        return FreePolynomial.add_all(parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def to_terms(self) -> List[Tuple[str, List[Tuple[str, int]]]]:
        """Serializable form: [(coefficient, [(edge, index), ...]), ...]."""
        return [
            (_format_scalar(c), [(g.edge, g.index) for g in m]) for m, c in self.items()
        ]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: List[str] = []
        for monomial, coefficient in self.items():
            magnitude = abs(coefficient)
            word = format_monomial(monomial)
            if magnitude == 1:
                body = word
            elif not monomial:
                body = _format_scalar(magnitude)
            else:
                body = f"{_format_scalar(magnitude)}*{word}"
            if not parts:
                parts.append(f"-{body}" if coefficient < 0 else body)
            else:
                parts.append(f"- {body}" if coefficient < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"FreePolynomial({self})"
