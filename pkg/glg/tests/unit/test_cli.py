# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Unit tests for the glg command line."""

import io
import json
import logging

import pytest

from glg.cli import build_parser, run
from glg.constants import SCHEMA_VERSION


@pytest.fixture(autouse=True)
def isolated_logging(monkeypatch):
    """Keep LOG_LEVEL and the glg logger handlers local to each test."""
    monkeypatch.setenv("LOG_LEVEL", "WARNING")
    yield
    glg_logger = logging.getLogger("glg")
    for handler in glg_logger.handlers:
        handler.close()
    glg_logger.handlers.clear()


def last_error(stderr: str) -> dict:
    return json.loads(stderr.strip().splitlines()[-1])


class TestParser:
    """Tests for build_parser."""

    def test_op_and_gen_are_nested(self):
        # Act
        args = build_parser().parse_args(["gen", "chain", "1,2"])

        # Assert
        assert args.command == "gen"
        assert args.generator == "chain"
        assert args.lengths == "1,2"

    def test_degree_option(self):
        # Act
        args = build_parser().parse_args(["hilbert", "g.glg", "-N", "7"])

        # Assert
        assert args.max_degree == 7
        assert args.reduce_rational is False


class TestAlgebraCommands:
    """Tests for commands that print algebra data."""

    def test_hilbert_json(self, orbit_file, capsys):
        # Act
        code = run(["hilbert", str(orbit_file), "-N", "4"])

        # Assert
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["schema"] == SCHEMA_VERSION
        assert payload["coeffs"] == [1, 3, 10, 32, 103]
        assert payload["den"] == [1, -4, 2, 2, -1]

    def test_hilbert_reduced(self, orbit_file, capsys):
        # Act
        code = run(["hilbert", str(orbit_file), "-N", "3", "--reduce-rational"])

        # Assert
        assert code == 0
        assert json.loads(capsys.readouterr().out)["den"] == [1, -3, -1, 1]

    def test_table_format(self, orbit_file, capsys):
        # Act
        code = run(["hilbert", str(orbit_file), "-N", "4", "--format", "table"])

        # Assert
        assert code == 0
        assert "coeffs: 1 3 10 32 103" in capsys.readouterr().out.splitlines()

    def test_reads_stdin(self, orbit_file, capsys, monkeypatch):
        # Arrange
        monkeypatch.setattr("sys.stdin", io.StringIO(orbit_file.read_text()))

        # Act
        code = run(["mseries", "-"])

        # Assert
        assert code == 0
        assert json.loads(capsys.readouterr().out)["m_series"] == [4, -2, -2, 1]

    def test_nci(self, orbit_file, capsys):
        # Act
        code = run(["nci", str(orbit_file), "-N", "4"])

        # Assert
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["is_nci"] is True
        assert payload["one_minus_g_plus_r"] == [1, -3, -1, 1]

    def test_oracle_with_truncation(self, orbit_file, capsys):
        # Act
        code = run(["oracle", str(orbit_file), "-N", "3", "--truncate-relations", "2"])

        # Assert
        assert code == 0
        assert json.loads(capsys.readouterr().out)["dimensions"] == [1, 3, 11, 39]

    def test_basis_words(self, orbit_file, capsys):
        # Act
        code = run(["basis", str(orbit_file), "-N", "1", "--words"])

        # Assert
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["words"] == [["()"], ["(a,1)", "(b,1)", "(c,1)"]]


class TestGraphCommands:
    """Tests for gen, op and validate."""

    def test_gen_delta_prints_glg(self, capsys):
        # Act
        code = run(["gen", "delta", "2"])

        # Assert
        assert code == 0
        assert capsys.readouterr().out == "vertex max 2\nvertex min 0\nedge e max min\n"

    def test_gen_json_on_request(self, capsys):
        # Act
        code = run(["gen", "chain", "1,2", "--format", "json"])

        # Assert
        assert code == 0
        assert json.loads(capsys.readouterr().out)["generator"] == "chain"

    def test_op_add_vertex(self, orbit_file, capsys):
        # Act
        code = run(["op", "add-vertex", str(orbit_file), "--edge", "e2", "--position", "1"])

        # Assert
        assert code == 0
        assert "vertex w 2" in capsys.readouterr().out.splitlines()

    def test_op_double_bouquet_of_two_files(self, temp_test_dir, capsys):
        # Arrange
        first = temp_test_dir / "delta.glg"
        second = temp_test_dir / "chain.glg"
        first.write_text("vertex max 2\nvertex min 0\nedge e max min\n")
        second.write_text(
            "vertex v0 2\nvertex v1 1\nvertex v2 0\nedge e1 v0 v1\nedge e2 v1 v2\n"
        )

        # Act
        code = run(["op", "dbouquet", str(first), str(second), "--format", "json"])

        # Assert
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["provenance"]["operation"] == "double-bouquet"

    def test_validate(self, orbit_file, capsys):
        # Act
        code = run(["validate", str(orbit_file)])

        # Assert
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["unique_minimal"] == "*"
        assert payload["layering_defect"] == 2


class TestExitCodes:
    """Tests for error reporting and exit codes."""

    def test_parse_error_reports_line(self, temp_test_dir, capsys):
        # Arrange
        bad = temp_test_dir / "bad.glg"
        bad.write_text("# header\nvertex a x\n")

        # Act
        code = run(["validate", str(bad)])

        # Assert
        assert code == 1
        error = last_error(capsys.readouterr().err)
        assert error["error"].startswith("2:")
        assert error["details"] == "GraphParseError"
        assert error["command"] == "validate"

    def test_invalid_utf8_is_a_parse_error(self, temp_test_dir, capsys):
        # Arrange
        bad = temp_test_dir / "bad.glg"
        bad.write_bytes(b"vertex a 1\nvertex \xff\xfe 0\n")

        # Act
        code = run(["validate", str(bad)])

        # Assert
        assert code == 1
        error = last_error(capsys.readouterr().err)
        assert error["error"] == "2:8: input is not valid UTF-8 (byte 0xff)"
        assert error["details"] == "GraphParseError"

    def test_invalid_utf8_on_stdin(self, capsys, monkeypatch):
        # Arrange
        stream = io.TextIOWrapper(io.BytesIO(b"\xfe\n"), encoding="utf-8")
        monkeypatch.setattr("sys.stdin", stream)

        # Act
        code = run(["validate", "-"])

        # Assert
        assert code == 1
        assert last_error(capsys.readouterr().err)["details"] == "GraphParseError"

    def test_missing_file(self, temp_test_dir, capsys):
        # Act
        code = run(["validate", str(temp_test_dir / "absent.glg")])

        # Assert
        assert code == 1
        assert "cannot read input" in last_error(capsys.readouterr().err)["error"]

    def test_budget_exceeded(self, orbit_file, capsys):
        # Act
        code = run(["oracle", str(orbit_file), "-N", "3", "--budget-monomials", "10"])

        # Assert
        assert code == 1
        assert last_error(capsys.readouterr().err)["details"] == "BudgetExceededError"

    def test_missing_argument_is_usage_error(self, capsys):
        # Act & Assert
        assert run(["hilbert"]) == 2

    def test_glg_format_only_for_graph_commands(self, orbit_file, capsys):
        # Act
        code = run(["hilbert", str(orbit_file), "--format", "glg"])

        # Assert
        assert code == 2
        assert "--format glg" in last_error(capsys.readouterr().err)["error"]

    def test_invalid_budget_is_usage_error(self, orbit_file, capsys):
        # Act
        code = run(["oracle", str(orbit_file), "--budget-rows", "0"])

        # Assert
        assert code == 2
        assert last_error(capsys.readouterr().err)["error"] == "invalid options"

    def test_bad_chain_lengths(self, capsys):
        # Act
        code = run(["gen", "chain", "1,x"])

        # Assert
        assert code == 2
        assert "comma-separated integers" in last_error(capsys.readouterr().err)["error"]

    def test_version(self, capsys):
        # Act
        code = run(["--version"])

        # Assert
        assert code == 0
        assert capsys.readouterr().out.startswith("glg ")
