# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Logging for the glg command line.

Services log per-degree progress at INFO. The console handler writes to
stderr at the requested level so payloads on stdout stay machine-readable;
the rotating file under ``LOG_DIR`` always keeps INFO and above.
"""

import logging
import os
import sys
import tempfile
from logging.handlers import RotatingFileHandler
from typing import Optional

from glg.constants import (
    DEFAULT_LOG_FILE,
    DEFAULT_LOG_LEVEL,
    LOG_FILE_BACKUP_COUNT,
    LOG_FILE_MAX_BYTES,
    SERVICE_NAME,
)

CONSOLE_FORMAT = "%(levelname)s %(name)s: %(message)s"
FILE_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def resolve_level(name: Optional[str]) -> int:
    """Numeric level for ``name``; unknown names give WARNING."""
    level = logging.getLevelName((name or DEFAULT_LOG_LEVEL).upper())
    return level if isinstance(level, int) else logging.WARNING


def setup_logging(
    level: Optional[str] = None,
    log_file_name: str = DEFAULT_LOG_FILE,
    logger_name: str = SERVICE_NAME,
) -> logging.Logger:
    """
    Attach a stderr console handler and a rotating file handler.

    Calling it again replaces the handlers it attached before.

    Args:
        level: Console level name; falls back to ``LOG_LEVEL``, then WARNING
        log_file_name: File name inside ``LOG_DIR`` (default: system temp dir)
        logger_name: Logger to configure; every ``glg.*`` module logger propagates to it

    Returns:
        The configured logger
    """
    console_level = resolve_level(level or os.environ.get("LOG_LEVEL"))
    file_level = min(console_level, logging.INFO)
    log_dir = os.environ.get("LOG_DIR") or tempfile.gettempdir()
    os.makedirs(log_dir, exist_ok=True)
    log_file = os.path.join(log_dir, log_file_name)

    logger = logging.getLogger(logger_name)
    for handler in logger.handlers:
        handler.close()
    logger.handlers.clear()
    logger.setLevel(file_level)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(console_level)
    console_handler.setFormatter(logging.Formatter(CONSOLE_FORMAT))
    logger.addHandler(console_handler)

    file_handler = RotatingFileHandler(
        log_file,
        maxBytes=LOG_FILE_MAX_BYTES,
        backupCount=LOG_FILE_BACKUP_COUNT,
        encoding="utf-8",
    )
    file_handler.setLevel(file_level)
    file_handler.setFormatter(logging.Formatter(FILE_FORMAT))
    logger.addHandler(file_handler)

    logger.debug(f"Console at {logging.getLevelName(console_level)}, file at {log_file}")
    return logger
