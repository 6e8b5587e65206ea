# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Exact row spaces over Q by incremental sparse elimination.

Rows arrive as sparse maps from an orderable column key (a monomial) to a
rational. Each row is reduced on arrival against an echelon basis indexed by
leading key, the least key of a row; a row that survives is normalized and
stored under its new leading key, a row that reduces to zero is dropped.
Nothing is ever row-reduced twice.

Arithmetic happens in sympy's ``QQ`` domain.
"""

import logging
from fractions import Fraction
from typing import Any, Dict, Hashable, Iterable, List, Mapping, Optional

from sympy.polys.domains import QQ

logger = logging.getLogger(__name__)

# sparse row keyed by column key, values are QQ elements
SparseRow = Dict[Any, Any]


def to_qq(value: Any) -> Any:
    """Convert an int or Fraction to an element of QQ."""
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    return value


def _sparse(row: Mapping[Hashable, Any]) -> SparseRow:
    sparse: SparseRow = {}
    for key, value in row.items():
        element = to_qq(value)
        if element:
            sparse[key] = element
    return sparse


class RationalMatrix:
    """Growing matrix over Q kept as an echelon basis of its row space.

    Column keys must be mutually comparable; the leading key of a row is its
    least key.
    """

    def __init__(self, label: str = "") -> None:
        self.label = label
        self._pivots: Dict[Any, SparseRow] = {}
        self.rows_added = 0

    def _reduce(
        self, row: SparseRow, extra: Optional[Dict[Any, SparseRow]] = None
    ) -> SparseRow:
        """Eliminate leading keys of ``row`` that already carry a pivot."""
        while row:
            lead = min(row)
            pivot = self._pivots.get(lead)
            if pivot is None and extra is not None:
                pivot = extra.get(lead)
            if pivot is None:
                return row
            factor = row[lead]
            for key, value in pivot.items():
                updated = row.get(key, QQ.zero) - factor * value
                if updated:
                    row[key] = updated
                else:
                    row.pop(key, None)
        return row

    @staticmethod
    def _normalized(row: SparseRow) -> SparseRow:
        lead = min(row)
        scale = row[lead]
        if scale == QQ.one:
            return row
        return {key: value / scale for key, value in row.items()}

    def add_row(self, row: Mapping[Hashable, Any]) -> bool:
        """Add one row given as {column key: coefficient}; True when the rank grew."""
        sparse = _sparse(row)
        if not sparse:
            return False
        self.rows_added += 1
        reduced = self._reduce(sparse)
        if not reduced:
            return False
        reduced = self._normalized(reduced)
        self._pivots[min(reduced)] = reduced
        return True

    def add_rows(self, rows: Iterable[Mapping[Hashable, Any]]) -> int:
        """Add rows in order; returns how much the rank grew."""
        return sum(1 for row in rows if self.add_row(row))

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def basis_rows(self) -> List[SparseRow]:
        """Echelon basis rows keyed by column key, values in QQ, by leading key."""
        return [self._pivots[key] for key in sorted(self._pivots)]

    def rank_increase(self, rows: Iterable[Mapping[Hashable, Any]]) -> int:
        """How much the rank would grow if ``rows`` were added; self is unchanged."""
        extra: Dict[Any, SparseRow] = {}
        for row in rows:
            sparse = _sparse(row)
            if not sparse:
                continue
            reduced = self._reduce(sparse, extra)
            if reduced:
                reduced = self._normalized(reduced)
                extra[min(reduced)] = reduced
        logger.debug(f"{self.label}: rank {self.rank} grows by {len(extra)}")
        return len(extra)

    def contains(self, row: Mapping[Hashable, Any]) -> bool:
        """Whether ``row`` lies in the row space."""
        return not self._reduce(_sparse(row))
