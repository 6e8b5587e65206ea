# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""PathPoly model - the coefficient list e(π,0..l(π)) of a path polynomial."""

from dataclasses import dataclass
from typing import List, Tuple

from glg.models.domain.free_polynomial import FreePolynomial


@dataclass(frozen=True)
class PathPoly:
    """Unsigned coefficients of P_π(t) = Σ_j (-1)^j e(π,j) t^j.

    ``coefficients[j]`` is e(π, j); coefficients[0] is 1 and the list has
    l(π) + 1 entries. The empty path at a vertex has coefficients [1].
    """

    path: Tuple[str, ...]
    coefficients: Tuple[FreePolynomial, ...]

    @property
    def length(self) -> int:
        """l(π)."""
        return len(self.coefficients) - 1

    def coefficient(self, index: int) -> FreePolynomial:
        """e(π, index); zero above the path length."""
        if 0 <= index < len(self.coefficients):
            return self.coefficients[index]
        return FreePolynomial.zero()

    def convolve(self, other: "PathPoly") -> "PathPoly":
        """Coefficient list of P_self·P_other for the concatenated path."""
        size = self.length + other.length + 1
        combined: List[FreePolynomial] = []
        for j in range(size):
            combined.append(
                FreePolynomial.add_all(
                    self.coefficient(k) * other.coefficient(j - k)
                    for k in range(max(0, j - other.length), min(j, self.length) + 1)
                )
            )
        return PathPoly(self.path + other.path, tuple(combined))
