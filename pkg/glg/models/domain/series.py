# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Series models - exact integer polynomials, truncated and rational power series.

These are hot-path values (every Möbius sum and Hilbert series goes through
them), so they are frozen dataclasses over tuples of Python ints rather than
pydantic models. Coefficients are unbounded; nothing here touches floats.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from glg.errors import SeriesError


def _strip(coefficients: Iterable[int]) -> Tuple[int, ...]:
    values = [int(c) for c in coefficients]
    while len(values) > 1 and values[-1] == 0:
        values.pop()
    return tuple(values) if values else (0,)


def _format_terms(coefficients: Sequence[int], variable: str = "z") -> str:
    parts: List[str] = []
    for degree, coefficient in enumerate(coefficients):
        if coefficient == 0:
            continue
        magnitude = abs(coefficient)
        if degree == 0:
            body = str(magnitude)
        else:
            power = variable if degree == 1 else f"{variable}^{degree}"
            body = power if magnitude == 1 else f"{magnitude}{power}"
        if not parts:
            parts.append(f"-{body}" if coefficient < 0 else body)
        else:
            parts.append(f"- {body}" if coefficient < 0 else f"+ {body}")
    return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class IntPolynomial:
    """Dense polynomial in z with exact integer coefficients, index = degree.

    Trailing zeros are stripped on construction; the zero polynomial is (0,).
    """

    coefficients: Tuple[int, ...] = (0,)

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _strip(self.coefficients))

    @classmethod
    def of(cls, *coefficients: int) -> "IntPolynomial":
        return cls(tuple(coefficients))

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls((0,))

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        if degree < 0:
            raise SeriesError(f"negative exponent {degree}")
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def from_terms(cls, terms: Dict[int, int]) -> "IntPolynomial":
        """Build from a {degree: coefficient} map."""
        if not terms:
            return cls.zero()
        if min(terms) < 0:
            raise SeriesError(f"negative exponent {min(terms)}")
        values = [0] * (max(terms) + 1)
        for degree, coefficient in terms.items():
            values[degree] += coefficient
        return cls(tuple(values))

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return -1 if self.is_zero() else len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return self.coefficients == (0,)

    def coefficient(self, degree: int) -> int:
        if 0 <= degree < len(self.coefficients):
            return self.coefficients[degree]
        return 0

    def value_at_one(self) -> int:
        return sum(self.coefficients)

    def shift(self, places: int) -> "IntPolynomial":
        """Multiply by z^places."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * places + self.coefficients)

    def __add__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        other = _as_polynomial(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(
            tuple(self.coefficient(k) + other.coefficient(k) for k in range(size))
        )

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        return self + (-_as_polynomial(other))

    def __rsub__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        return _as_polynomial(other) - self

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        other = _as_polynomial(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial.zero()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return IntPolynomial(tuple(product))

    __rmul__ = __mul__

    def divide_by_one_minus_z(self) -> Optional["IntPolynomial"]:
        """Exact quotient by (1 - z), or None when (1 - z) does not divide."""
        if self.value_at_one() != 0:
            return None
        quotient: List[int] = []
        running = 0
        for coefficient in self.coefficients[:-1]:
            running += coefficient
            quotient.append(running)
        return IntPolynomial(tuple(quotient))

    def to_list(self) -> List[int]:
        return list(self.coefficients)

    def __str__(self) -> str:
        return _format_terms(self.coefficients)


def _as_polynomial(value: Union[IntPolynomial, int]) -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    return IntPolynomial((int(value),))


ONE_MINUS_Z = IntPolynomial((1, -1))


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series known up to and including z^order."""

    order: int
    coefficients: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise SeriesError(f"truncation order must be nonnegative, got {self.order}")
        if len(self.coefficients) != self.order + 1:
            raise SeriesError(
                f"series of order {self.order} needs {self.order + 1} coefficients, "
                f"got {len(self.coefficients)}"
            )

    @classmethod
    def of(cls, coefficients: Iterable[int], order: int) -> "TruncatedSeries":
        """Truncate or zero-pad ``coefficients`` to the given order."""
        values = [int(c) for c in coefficients][: order + 1]
        values.extend([0] * (order + 1 - len(values)))
        return cls(order, tuple(values))

    @classmethod
    def from_polynomial(cls, polynomial: IntPolynomial, order: int) -> "TruncatedSeries":
        return cls.of(polynomial.coefficients, order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.of((1,), order)

    def __getitem__(self, degree: int) -> int:
        return self.coefficients[degree]

    def _common_order(self, other: "TruncatedSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = self._common_order(other)
        return TruncatedSeries(
            order, tuple(self[k] + other[k] for k in range(order + 1))
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-c for c in self.coefficients))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product truncated at the smaller order."""
        order = self._common_order(other)
        product = [0] * (order + 1)
        for i in range(order + 1):
            a = self[i]
            if a == 0:
                continue
            for j in range(order + 1 - i):
                product[i + j] += a * other[j]
        return TruncatedSeries(order, tuple(product))

    def inverse(self) -> "TruncatedSeries":
        """
        Multiplicative inverse to the same order.

        Raises:
            SeriesError: If the constant term is not a unit (+1 or -1)
        """
        constant = self[0]
        if constant not in (1, -1):
            raise SeriesError(
                f"series with constant term {constant} has no integer inverse"
            )
        inverse = [0] * (self.order + 1)
        inverse[0] = constant
        for n in range(1, self.order + 1):
            total = sum(self[k] * inverse[n - k] for k in range(1, n + 1))
            inverse[n] = -constant * total
        return TruncatedSeries(self.order, tuple(inverse))

    def to_list(self) -> List[int]:
        return list(self.coefficients)

    def __str__(self) -> str:
        return f"{_format_terms(self.coefficients)} + O(z^{self.order + 1})"


@dataclass(frozen=True)
class RationalSeries:
    """numerator / denominator with the denominator's constant term equal to 1."""

    numerator: IntPolynomial
    denominator: IntPolynomial

    def __post_init__(self) -> None:
        if self.denominator.coefficient(0) != 1:
            raise SeriesError(
                "denominator must have constant term 1, got "
                f"{self.denominator.coefficient(0)}"
            )

    def expand(self, order: int) -> TruncatedSeries:
        """Long division of numerator by denominator up to z^order."""
        if order < 0:
            raise SeriesError(f"truncation order must be nonnegative, got {order}")
        denominator = self.denominator.coefficients
        coefficients: List[int] = []
        for n in range(order + 1):
            value = self.numerator.coefficient(n)
            for k in range(1, min(n, len(denominator) - 1) + 1):
                value -= denominator[k] * coefficients[n - k]
            coefficients.append(value)
        return TruncatedSeries(order, tuple(coefficients))

    def reduced(self) -> "RationalSeries":
        """Cancel every common factor (1 - z)."""
        numerator, denominator = self.numerator, self.denominator
        while not numerator.is_zero():
            top = numerator.divide_by_one_minus_z()
            bottom = denominator.divide_by_one_minus_z()
            if top is None or bottom is None:
                break
            numerator, denominator = top, bottom
        return RationalSeries(numerator, denominator)

    def reciprocal(self) -> "RationalSeries":
        """
        1 / self.

        Raises:
            SeriesError: If the numerator does not have constant term 1
        """
        if self.numerator.coefficient(0) != 1:
            raise SeriesError(
                "reciprocal needs a numerator with constant term 1, got "
                f"{self.numerator.coefficient(0)}"
            )
        return RationalSeries(self.denominator, self.numerator)

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"


class HilbertSeries(NamedTuple):
    """Closed form and its expansion."""

    rational: RationalSeries
    expansion: TruncatedSeries
