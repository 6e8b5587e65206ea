# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Algebra response models - Möbius data, series, bases, relations, dimensions."""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class MoebiusEntry(BaseModel):
    upper: str
    lower: str
    mu: int


class MoebiusResponse(BaseModel):
    """μ over every comparable pair, diagonal included."""

    pair_count: int
    pairs: List[MoebiusEntry]


class MSeriesResponse(BaseModel):
    """M(Γ)(z) and, where defined, its lower and upper variants."""

    m_series: List[int]
    text: str
    m_lower: Optional[List[int]] = None
    m_upper: Optional[List[int]] = None


class SeriesPayload(BaseModel):
    """A rational series with its expansion."""

    num: List[int]
    den: List[int]
    coeffs: List[int]
    order: int


class HilbertResponse(SeriesPayload):
    reduced: bool
    text: str
    tree_formula: Optional[SeriesPayload] = Field(
        default=None, description="Closed form for rooted trees"
    )


class BasisResponse(BaseModel):
    """Basis counts by degree, per starting vertex, and optionally the words."""

    max_degree: int
    counts: List[int]
    by_vertex: Dict[str, List[int]]
    words: Optional[List[List[str]]] = None


class RelationEntry(BaseModel):
    source: str
    target: str
    reference_path: List[str]
    other_path: List[str]
    degree: int
    polynomial: str


class RelationsResponse(BaseModel):
    """Relation generators of the ideal, tagged by degree."""

    truncation: Optional[int] = None
    count: int
    by_degree: Dict[str, int]
    relations: List[RelationEntry]


class OracleResponse(BaseModel):
    """Graded dimensions by exact linear algebra."""

    max_degree: int
    truncation: Optional[int] = None
    dimensions: List[int]
    relation_series: List[int]
    hilbert_coefficients: Optional[List[int]] = None
    agrees_with_hilbert: Optional[bool] = None
