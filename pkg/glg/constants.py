# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Constants for the GLG toolkit."""

import os

# Application version
VERSION = "1.0.0"

# Output schema tag written at the top of every JSON payload
SCHEMA_VERSION = "glg/1"

SERVICE_NAME = "glg"
SERVICE_DESCRIPTION = (
    "Algebras of generalized layered graphs: Möbius functions, Hilbert series, "
    "bases and an exact linear-algebra oracle"
)


def _env_int(name: str, default: int) -> int:
    """Read a positive integer from the environment, falling back on bad input."""
    try:
        value = int(os.environ.get(name, str(default)))
    except ValueError:
        return default
    return value if value > 0 else default


# Default truncation orders
DEFAULT_SERIES_DEGREE = 10
DEFAULT_ORACLE_DEGREE = 5
DEFAULT_NCI_DEGREE = 8
DEFAULT_IDENTITY_DEGREE = 4

# Oracle budgets
MAX_MONOMIALS_PER_DEGREE = _env_int("GLG_BUDGET_MONOMIALS", 200_000)
MAX_ROWS_PER_DEGREE = _env_int("GLG_BUDGET_ROWS", 2_000_000)

# Path enumeration cap per ordered vertex pair
MAX_PATHS_PER_PAIR = _env_int("GLG_PATH_LIMIT", 10_000)

# Integers beyond this magnitude are written to JSON as decimal strings
JSON_SAFE_INTEGER = 2**53 - 1

# Prefix applied to clashing names of the second operand of a bouquet
SECOND_OPERAND_PREFIX = "g2."

# Logging
DEFAULT_LOG_FILE = "glg.log"
DEFAULT_LOG_LEVEL = "WARNING"
LOG_FILE_MAX_BYTES = 10 * 1024 * 1024  # 10MB
LOG_FILE_BACKUP_COUNT = 5
