# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Ranking models - rank assignments and their comparison."""

from enum import Enum
from typing import Dict

# vertex name -> rank
RankFunction = Dict[str, int]


class RankingComparison(str, Enum):
    """Outcome of comparing two rankings by the ranks of edge tails."""

    EQUAL = "equal"
    GE = "ge"
    LE = "le"
    INCOMPARABLE = "incomparable"
