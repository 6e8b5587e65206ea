# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""CommandConfig model - validated options shared by every subcommand."""

from typing import List, Literal, Optional

from pydantic import BaseModel, Field

from glg.constants import MAX_MONOMIALS_PER_DEGREE, MAX_ROWS_PER_DEGREE

OutputFormat = Literal["json", "table", "glg"]


class CommandConfig(BaseModel):
    """Options of one CLI invocation."""

    command: str
    inputs: List[str] = Field(default_factory=list)
    max_degree: int = Field(ge=0)
    output_format: OutputFormat = "json"
    seed: int = 0
    monomial_budget: int = Field(default=MAX_MONOMIALS_PER_DEGREE, gt=0)
    row_budget: int = Field(default=MAX_ROWS_PER_DEGREE, gt=0)
    truncate_relations: Optional[int] = Field(default=None, ge=1)
    reduce_rational: bool = False
