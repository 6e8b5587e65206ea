# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Reachability model - the path order v > w with path counts."""

from typing import Dict, List

from pydantic import BaseModel, ConfigDict


class Reachability(BaseModel):
    """Transitive closure of the edge relation with directed path counts.

    ``path_counts[v][w]`` is the number of directed paths from v to w; only
    pairs with at least one path are stored, and never v == w.
    """

    model_config = ConfigDict(frozen=True)

    vertex_order: List[str]
    path_counts: Dict[str, Dict[str, int]]

    def reaches(self, source: str, target: str) -> bool:
        """True iff a directed path from source to target exists (v > w)."""
        return target in self.path_counts.get(source, {})

    def at_least(self, source: str, target: str) -> bool:
        """Path order v >= w."""
        return source == target or self.reaches(source, target)

    def path_count(self, source: str, target: str) -> int:
        if source == target:
            return 1
        return self.path_counts.get(source, {}).get(target, 0)

    def descendants(self, vertex: str) -> List[str]:
        """Vertices strictly below ``vertex`` in the path order, stored order."""
        below = self.path_counts.get(vertex, {})
        return [name for name in self.vertex_order if name in below]

    def ancestors(self, vertex: str) -> List[str]:
        """Vertices strictly above ``vertex`` in the path order, stored order."""
        return [name for name in self.vertex_order if self.reaches(name, vertex)]
