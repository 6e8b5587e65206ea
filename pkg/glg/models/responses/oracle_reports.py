# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Oracle report models - verdicts of the linear-algebra checks."""

from typing import List, Optional

from pydantic import BaseModel, Field


class DegreeCheck(BaseModel):
    """One degree of an independence or injection check."""

    degree: int
    count: int = Field(description="Number of basis words of this degree")
    dimension: int = Field(description="dim of the quotient in this degree")
    independent: bool
    passed: bool


class NciReport(BaseModel):
    """Noncommutative complete intersection verdict to a fixed order."""

    is_nci: bool
    max_degree: int
    generator_series: List[int]
    relation_series: List[int]
    hilbert_coefficients: List[int]
    one_minus_g_plus_r: List[int]
    witness: Optional[int] = None


class IndependenceReport(BaseModel):
    """Whether the basis words are a basis of each graded component."""

    passed: bool
    dimensions: List[int]
    degrees: List[DegreeCheck]


class InjectionReport(BaseModel):
    """Whether placing a vertex on an edge induces an injection."""

    edge: str
    position: int
    passed: bool
    relations_preserved: bool
    degrees: List[DegreeCheck]


class IdealEqualityReport(BaseModel):
    passed: bool
    equal_by_degree: List[bool]
    reference_dimensions: List[int] = Field(
        description="Rank of the reference-path ideal in each degree"
    )
