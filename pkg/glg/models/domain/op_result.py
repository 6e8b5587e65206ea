# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""OpResult model - output graph of a graph operation plus its provenance."""

from typing import Dict, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from glg.models.domain.ranked_digraph import RankedDigraph

ParameterValue = Union[str, int, bool, None]


class Provenance(BaseModel):
    """Which operation built a graph and where every inherited name went.

    ``vertex_mapping`` and ``edge_mapping`` are keyed by operand label ("g" for
    unary operations, "g1"/"g2" for bouquets) and map each inherited name to
    its name in the output graph.
    """

    model_config = ConfigDict(frozen=True)

    operation: str
    parameters: Dict[str, ParameterValue] = Field(default_factory=dict)
    vertex_mapping: Dict[str, Dict[str, str]] = Field(default_factory=dict)
    edge_mapping: Dict[str, Dict[str, str]] = Field(default_factory=dict)
    path_existed: Optional[bool] = None


class OpResult(BaseModel):
    """A constructed graph and how it was obtained."""

    model_config = ConfigDict(frozen=True)

    graph: RankedDigraph
    provenance: Provenance
