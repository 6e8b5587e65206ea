# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Relation model - one homogeneous generator of the relation ideal."""

from dataclasses import dataclass
from typing import Tuple

from glg.models.domain.free_polynomial import FreePolynomial


@dataclass(frozen=True)
class RelationGenerator:
    """e(reference, j) - e(other, j) for two parallel paths source -> target."""

    source: str
    target: str
    reference_path: Tuple[str, ...]
    other_path: Tuple[str, ...]
    degree: int
    polynomial: FreePolynomial
