# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Identity report models - outcome of the series identity suite."""

from typing import List

from pydantic import BaseModel, Field


class IdentityCheck(BaseModel):
    """One identity checked over all of its applicable instances."""

    name: str
    statement: str
    passed: bool = True
    instances: int = 0
    skipped: int = 0
    failures: List[str] = Field(default_factory=list)


class IdentityReport(BaseModel):
    """Every identity of the suite for one graph or one pair of graphs."""

    graphs: List[str]
    max_degree: int
    passed: bool
    identities: List[IdentityCheck]
