# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""BasisWord model - words ((v1,k1)...(vr,kr)) in the letters of B(Γ)."""

from dataclasses import dataclass
from typing import List, Tuple

# (vertex name, k) with 1 <= k <= rank(vertex)
Letter = Tuple[str, int]


@dataclass(frozen=True, order=True)
class BasisWord:
    """A word of letters (v, k); its graded degree is the sum of the k."""

    letters: Tuple[Letter, ...] = ()

    @property
    def degree(self) -> int:
        return sum(k for _, k in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def to_list(self) -> List[List[object]]:
        return [[vertex, k] for vertex, k in self.letters]

    def __str__(self) -> str:
        if not self.letters:
            return "()"
        return "".join(f"({vertex},{k})" for vertex, k in self.letters)
