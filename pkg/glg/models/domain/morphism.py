# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""GraphMorphism model - a vertex map and an edge map between layered graphs."""

from typing import Dict

from pydantic import BaseModel, ConfigDict, model_validator

from glg.errors import MorphismError
from glg.models.domain.ranked_digraph import RankedDigraph


class GraphMorphism(BaseModel):
    """φ = (φ_V, φ_E) with t(φ(e)) = φ(t(e)), h(φ(e)) = φ(h(e)), l(φ(e)) <= l(e)."""

    model_config = ConfigDict(frozen=True)

    source: RankedDigraph
    target: RankedDigraph
    vertex_map: Dict[str, str]
    edge_map: Dict[str, str]

    @model_validator(mode="after")
    def _check_laws(self) -> "GraphMorphism":
        if set(self.vertex_map) != set(self.source.vertex_names):
            missing = sorted(set(self.source.vertex_names) - set(self.vertex_map))
            raise MorphismError(f"vertex map is not total (missing: {missing})")
        if set(self.edge_map) != set(self.source.edge_names):
            missing = sorted(set(self.source.edge_names) - set(self.edge_map))
            raise MorphismError(f"edge map is not total (missing: {missing})")
        for vertex, image in self.vertex_map.items():
            if not self.target.has_vertex(image):
                raise MorphismError(f"vertex {vertex!r} maps to unknown vertex {image!r}")

        for edge in self.source.edges:
            image_name = self.edge_map[edge.name]
            if not self.target.has_edge(image_name):
                raise MorphismError(
                    f"edge {edge.name!r} maps to unknown edge {image_name!r}"
                )
            image = self.target.edge(image_name)
            if image.tail != self.vertex_map[edge.tail]:
                raise MorphismError(
                    f"edge {edge.name!r}: tail of image {image_name!r} is {image.tail!r}, "
                    f"expected {self.vertex_map[edge.tail]!r}"
                )
            if image.head != self.vertex_map[edge.head]:
                raise MorphismError(
                    f"edge {edge.name!r}: head of image {image_name!r} is {image.head!r}, "
                    f"expected {self.vertex_map[edge.head]!r}"
                )
            if self.target.length(image) > self.source.length(edge):
                raise MorphismError(
                    f"edge {edge.name!r} of length {self.source.length(edge)} maps to "
                    f"{image_name!r} of length {self.target.length(image)}"
                )
        return self
