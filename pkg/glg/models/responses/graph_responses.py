# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Graph response models - validation, rankings and constructed graphs."""

from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field


class ValidateResponse(BaseModel):
    """Summary of a validated graph."""

    vertices: int
    edges: int
    max_rank: int
    edge_lengths: Dict[str, int]
    layered: bool
    layering_defect: int
    sinks: List[str]
    sources: List[str]
    unique_minimal: Optional[str] = None
    minimal_at_rank_zero: bool = False
    unique_maximal: Optional[str] = None


class RankResponse(BaseModel):
    """Canonical ranks and the re-ranked graph."""

    ranks: Dict[str, int]
    graph: str = Field(description=".glg text of the graph with canonical ranks")


class RankEnumerationResponse(BaseModel):
    bound: int
    canonical_max: int
    below_canonical: bool = Field(
        description="True when the bound is below the canonical maximum rank"
    )
    count: int
    functions: List[Dict[str, int]]


class GraphMapping(BaseModel):
    """Where every inherited vertex and edge name went, per operand."""

    vertices: Dict[str, Dict[str, str]]
    edges: Dict[str, Dict[str, str]]


class OperationInfo(BaseModel):
    operation: str
    parameters: Dict[str, Union[str, int, bool, None]]
    path_existed: Optional[bool] = None


class OpResponse(BaseModel):
    """A constructed graph with its provenance."""

    graph: str
    mapping: GraphMapping
    provenance: OperationInfo


class GeneratedGraphResponse(BaseModel):
    generator: str
    parameters: Dict[str, Union[str, int, float, None]]
    graph: str
