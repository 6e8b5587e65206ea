# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""MoebiusTable model - μ(v, w) on the comparable pairs of the path order."""

from typing import Dict, Iterator, Tuple

from pydantic import BaseModel, ConfigDict


class MoebiusTable(BaseModel):
    """``values[v][w]`` holds μ(v, w) for every v >= w, diagonal included."""

    model_config = ConfigDict(frozen=True)

    values: Dict[str, Dict[str, int]]

    def mu(self, upper: str, lower: str) -> int:
        """μ(upper, lower), zero on incomparable pairs."""
        return self.values.get(upper, {}).get(lower, 0)

    def pairs(self) -> Iterator[Tuple[str, str, int]]:
        """(v, w, μ(v, w)) for every comparable pair, in stored order."""
        for upper, row in self.values.items():
            for lower, value in row.items():
                yield upper, lower, value

    def pair_count(self) -> int:
        return sum(len(row) for row in self.values.values())
