# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""ErrorResponse model - standardized error diagnostic format."""

from typing import Optional

from pydantic import BaseModel


class ErrorResponse(BaseModel):
    """Error diagnostic written to stderr."""

    error: str
    command: Optional[str] = None
    details: Optional[str] = None
