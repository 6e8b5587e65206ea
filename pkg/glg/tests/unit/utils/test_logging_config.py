# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Unit tests for logging configuration."""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler

import pytest

from glg.utils.logging_config import resolve_level, setup_logging


def handlers_by_type(logger):
    console = [
        h
        for h in logger.handlers
        if isinstance(h, logging.StreamHandler) and not isinstance(h, RotatingFileHandler)
    ]
    files = [h for h in logger.handlers if isinstance(h, RotatingFileHandler)]
    return console, files


@pytest.fixture
def closing():
    """Close handlers of the loggers a test configured."""
    names = []
    yield names.append
    for name in names:
        logger = logging.getLogger(name)
        for handler in logger.handlers:
            handler.close()
        logger.handlers.clear()


class TestResolveLevel:
    """Tests for resolve_level."""

    @pytest.mark.parametrize(
        "name,expected",
        [("debug", logging.DEBUG), ("INFO", logging.INFO), ("chatty", logging.WARNING), (None, logging.WARNING)],
    )
    def test_names(self, name, expected):
        # Act & Assert
        assert resolve_level(name) == expected


class TestSetupLogging:
    """Tests for setup_logging."""

    def test_console_and_file_handlers(self, temp_test_dir, monkeypatch, closing):
        # Arrange
        monkeypatch.setenv("LOG_DIR", str(temp_test_dir))
        closing("glg.test_handlers")

        # Act
        logger = setup_logging("WARNING", "test.log", "glg.test_handlers")

        # Assert
        console, files = handlers_by_type(logger)
        assert len(console) == 1 and len(files) == 1
        assert console[0].stream is sys.stderr
        assert console[0].level == logging.WARNING
        assert files[0].level == logging.INFO
        assert logger.level == logging.INFO
        assert (temp_test_dir / "test.log").exists()

    def test_explicit_level_beats_environment(self, monkeypatch, closing):
        # Arrange
        monkeypatch.setenv("LOG_LEVEL", "ERROR")
        closing("glg.test_explicit")

        # Act
        logger = setup_logging("DEBUG", "test_explicit.log", "glg.test_explicit")

        # Assert
        console, files = handlers_by_type(logger)
        assert console[0].level == logging.DEBUG
        assert files[0].level == logging.DEBUG
        assert logger.level == logging.DEBUG

    def test_level_from_environment(self, monkeypatch, closing):
        # Arrange
        monkeypatch.setenv("LOG_LEVEL", "error")
        closing("glg.test_env")

        # Act
        logger = setup_logging(log_file_name="test_env.log", logger_name="glg.test_env")

        # Assert
        console, _ = handlers_by_type(logger)
        assert console[0].level == logging.ERROR

    def test_info_reaches_file_but_not_console(self, temp_test_dir, monkeypatch, closing):
        # Arrange
        monkeypatch.setenv("LOG_DIR", str(temp_test_dir))
        closing("glg.test_split")
        logger = setup_logging("WARNING", "split.log", "glg.test_split")

        # Act
        logging.getLogger("glg.test_split.oracle").info("Ideal degree 3")
        for handler in logger.handlers:
            handler.flush()

        # Assert
        assert "Ideal degree 3" in (temp_test_dir / "split.log").read_text(encoding="utf-8")

    def test_repeated_setup_replaces_handlers(self, closing):
        # Arrange
        closing("glg.test_repeat")

        # Act
        first = setup_logging("INFO", "test_repeat.log", "glg.test_repeat")
        old_handlers = list(first.handlers)
        logger = setup_logging("INFO", "test_repeat.log", "glg.test_repeat")

        # Assert
        assert len(logger.handlers) == 2
        assert not set(old_handlers) & set(logger.handlers)

    def test_log_dir_is_created(self, temp_test_dir, monkeypatch, closing):
        # Arrange
        nested = temp_test_dir / "nested" / "logs"
        monkeypatch.setenv("LOG_DIR", str(nested))
        closing("glg.test_nested")

        # Act
        setup_logging(log_file_name="nested.log", logger_name="glg.test_nested")

        # Assert
        assert os.path.isdir(nested)
