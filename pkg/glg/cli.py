# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""CLI entry point for GLG.

Every subcommand reads .glg input (a path, or "-" for stdin), calls one tool
from :mod:`glg.tools` and writes the payload to stdout. Exit codes:

    0  success
    1  domain error (bad graph, failed precondition, budget exceeded)
    2  usage error
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from dotenv import load_dotenv
from pydantic import ValidationError

# Load environment variables FIRST so the constants module sees .env budgets
load_dotenv()

from glg.constants import (  # noqa: E402
    DEFAULT_IDENTITY_DEGREE,
    DEFAULT_LOG_LEVEL,
    DEFAULT_NCI_DEGREE,
    DEFAULT_ORACLE_DEGREE,
    DEFAULT_SERIES_DEGREE,
    MAX_MONOMIALS_PER_DEGREE,
    MAX_ROWS_PER_DEGREE,
    SERVICE_DESCRIPTION,
    VERSION,
)
from glg.errors import GlgError, GraphParseError  # noqa: E402
from glg.models.command_config import CommandConfig  # noqa: E402
from glg.models.domain.ranked_digraph import RankedDigraph  # noqa: E402
from glg.models.responses.error_response import ErrorResponse  # noqa: E402
from glg.services.graph_parser import parse_graph  # noqa: E402
from glg.tools import algebra_tools, graph_tools, oracle_tools  # noqa: E402
from glg.utils.json_output import render_json, render_table  # noqa: E402
from glg.utils.logging_config import setup_logging  # noqa: E402

logger = logging.getLogger(__name__)

GRAPH_COMMANDS = {"gen", "op"}

Handler = Callable[[argparse.Namespace, CommandConfig], Dict[str, Any]]


class UsageError(Exception):
    """Arguments that parse but do not make sense together."""


def _read_graph(source: str) -> RankedDigraph:
    try:
        text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        prefix = exc.object[: exc.start]
        line = prefix.count(b"\n") + 1
        column = exc.start - prefix.rfind(b"\n")
        raise GraphParseError(
            f"input is not valid UTF-8 (byte 0x{exc.object[exc.start]:02x})", line, column
        ) from exc
    return parse_graph(text)


def _graphs(config: CommandConfig) -> List[RankedDigraph]:
    return [_read_graph(source) for source in config.inputs]


HANDLERS: Dict[str, Handler] = {
    "validate": lambda args, c: graph_tools.validate_tool(_graphs(c)[0]),
    "rank-can": lambda args, c: graph_tools.rank_canonical_tool(_graphs(c)[0]),
    "rank-enum": lambda args, c: graph_tools.rank_enumerate_tool(
        _graphs(c)[0], args.bound
    ),
    "moebius": lambda args, c: algebra_tools.moebius_tool(_graphs(c)[0]),
    "mseries": lambda args, c: algebra_tools.mseries_tool(_graphs(c)[0]),
    "hilbert": lambda args, c: algebra_tools.hilbert_tool(
        _graphs(c)[0], c.max_degree, c.reduce_rational
    ),
    "basis": lambda args, c: algebra_tools.basis_tool(
        _graphs(c)[0], c.max_degree, args.words
    ),
    "relations": lambda args, c: algebra_tools.relations_tool(
        _graphs(c)[0], c.truncate_relations
    ),
    "oracle": lambda args, c: oracle_tools.oracle_tool(
        _graphs(c)[0],
        c.max_degree,
        c.truncate_relations,
        c.monomial_budget,
        c.row_budget,
    ),
    "nci": lambda args, c: oracle_tools.nci_tool(
        _graphs(c)[0], c.max_degree, c.monomial_budget, c.row_budget
    ),
    "check-identities": lambda args, c: oracle_tools.identities_tool(
        _graphs(c), None, c.max_degree, c.monomial_budget, c.row_budget
    ),
    "op add-vertex": lambda args, c: graph_tools.add_vertex_tool(
        _graphs(c)[0], args.edge, args.position, args.name
    ),
    "op add-edge": lambda args, c: graph_tools.add_edge_tool(
        _graphs(c)[0], args.tail, args.head, args.name
    ),
    "op invert": lambda args, c: graph_tools.invert_tool(_graphs(c)[0]),
    "op bouquet": lambda args, c: graph_tools.bouquet_tool(*_graphs(c)),
    "op dbouquet": lambda args, c: graph_tools.double_bouquet_tool(*_graphs(c)),
    "gen delta": lambda args, c: graph_tools.gen_delta_tool(args.length),
    "gen chain": lambda args, c: graph_tools.gen_chain_tool(_int_list(args.lengths)),
    "gen tree": lambda args, c: graph_tools.gen_tree_tool(args.spec),
    "gen sym": lambda args, c: graph_tools.gen_sym_tool(args.size, args.permutation),
    "gen random": lambda args, c: graph_tools.gen_random_tool(
        args.vertices, args.edge_prob, args.rank_bound, c.seed
    ),
}

DEFAULT_DEGREES = {
    "hilbert": DEFAULT_SERIES_DEGREE,
    "basis": DEFAULT_SERIES_DEGREE,
    "oracle": DEFAULT_ORACLE_DEGREE,
    "nci": DEFAULT_NCI_DEGREE,
    "check-identities": DEFAULT_IDENTITY_DEGREE,
}


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["json", "table", "glg"],
        default=None,
        help="Output format (default: json; glg for gen and op)",
    )
    common.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")
    common.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
        help=f"Console logging level (default: $LOG_LEVEL or {DEFAULT_LOG_LEVEL})",
    )

    degree = argparse.ArgumentParser(add_help=False)
    degree.add_argument(
        "-N", "--max-degree", type=int, default=None, help="Truncation degree"
    )

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument(
        "--budget-monomials",
        type=int,
        default=MAX_MONOMIALS_PER_DEGREE,
        help=f"Monomials allowed per degree (default: {MAX_MONOMIALS_PER_DEGREE})",
    )
    budget.add_argument(
        "--budget-rows",
        type=int,
        default=MAX_ROWS_PER_DEGREE,
        help=f"Spanning rows allowed per degree (default: {MAX_ROWS_PER_DEGREE})",
    )

    truncate = argparse.ArgumentParser(add_help=False)
    truncate.add_argument(
        "--truncate-relations",
        type=int,
        default=None,
        metavar="K",
        help="Keep only relations of degree < K (the algebra A(K, Γ))",
    )

    parser = argparse.ArgumentParser(prog="glg", description=SERVICE_DESCRIPTION)
    parser.add_argument("--version", action="version", version=f"glg {VERSION}")
    commands = parser.add_subparsers(dest="command", required=True)

    def graph_command(
        name: str, help_text: str, *parents: argparse.ArgumentParser
    ) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text, parents=[common, *parents])
        sub.add_argument("input", help=".glg file, or - for stdin")
        return sub

    graph_command("validate", "Validate a graph and summarise it")
    graph_command("rank-can", "Canonical ranks")
    rank_enum = graph_command("rank-enum", "Enumerate rank functions")
    rank_enum.add_argument("--bound", type=int, default=None, help="Largest rank allowed")
    graph_command("moebius", "Möbius function of the path order")
    graph_command("mseries", "The polynomial M(Γ)(z)")
    hilbert = graph_command("hilbert", "Hilbert series of A(Γ)", degree)
    hilbert.add_argument(
        "--reduce-rational", action="store_true", help="Cancel common (1 - z) factors"
    )
    basis = graph_command("basis", "Monomial basis counts", degree)
    basis.add_argument("--words", action="store_true", help="List the basis words")
    graph_command("relations", "Relation generators", truncate)
    graph_command("oracle", "Graded dimensions by linear algebra", degree, budget, truncate)
    graph_command("nci", "Noncommutative complete intersection test", degree, budget)
    identities = graph_command("check-identities", "Run the identity suite", degree, budget)
    identities.add_argument("second", nargs="?", help="Optional second graph")

    op = commands.add_parser("op", help="Graph operations")
    ops = op.add_subparsers(dest="operation", required=True)
    add_vertex = ops.add_parser("add-vertex", parents=[common], help="Place a vertex on an edge")
    add_vertex.add_argument("input")
    add_vertex.add_argument("--edge", required=True)
    add_vertex.add_argument("--position", type=int, required=True)
    add_vertex.add_argument("--name", default="w")
    add_edge = ops.add_parser("add-edge", parents=[common], help="Add an edge")
    add_edge.add_argument("input")
    add_edge.add_argument("--tail", required=True)
    add_edge.add_argument("--head", required=True)
    add_edge.add_argument("--name", default="e_new")
    invert = ops.add_parser("invert", parents=[common], help="Reverse every edge")
    invert.add_argument("input")
    for name, help_text in (
        ("bouquet", "Identify minimal vertices"),
        ("dbouquet", "Identify minimal and maximal vertices"),
    ):
        pair = ops.add_parser(name, parents=[common], help=help_text)
        pair.add_argument("input")
        pair.add_argument("second")

    gen = commands.add_parser("gen", help="Graph generators")
    gens = gen.add_subparsers(dest="generator", required=True)
    delta = gens.add_parser("delta", parents=[common], help="Two vertices, one edge")
    delta.add_argument("length", type=int)
    chain = gens.add_parser("chain", parents=[common], help="Directed path")
    chain.add_argument("lengths", help="Comma-separated edge lengths, top first")
    tree = gens.add_parser("tree", parents=[common], help="Rooted tree")
    tree.add_argument("spec", help="parent:length for v1, v2, ... e.g. 0:1,1:2")
    sym = gens.add_parser("sym", parents=[common], help="Orbit subset graph of a permutation")
    sym.add_argument("size", type=int)
    sym.add_argument("permutation", nargs="?", default="", help="Cycle notation, e.g. '(1 2)'")
    random_dag = gens.add_parser("random", parents=[common], help="Seeded random graph")
    random_dag.add_argument("vertices", type=int)
    random_dag.add_argument("--edge-prob", type=float, default=0.3)
    random_dag.add_argument("--rank-bound", type=int, default=None)

    return parser


def _command_name(args: argparse.Namespace) -> str:
    if args.command == "op":
        return f"op {args.operation}"
    if args.command == "gen":
        return f"gen {args.generator}"
    return str(args.command)


def _config(args: argparse.Namespace, command: str) -> CommandConfig:
    inputs = [
        value
        for value in (getattr(args, "input", None), getattr(args, "second", None))
        if value
    ]
    max_degree = getattr(args, "max_degree", None)
    if max_degree is None:
        max_degree = DEFAULT_DEGREES.get(command, 0)
    output_format = args.format or ("glg" if args.command in GRAPH_COMMANDS else "json")
    if output_format == "glg" and args.command not in GRAPH_COMMANDS:
        raise UsageError("--format glg is only available for gen and op")
    return CommandConfig(
        command=command,
        inputs=inputs,
        max_degree=max_degree,
        output_format=output_format,
        seed=args.seed,
        monomial_budget=getattr(args, "budget_monomials", MAX_MONOMIALS_PER_DEGREE),
        row_budget=getattr(args, "budget_rows", MAX_ROWS_PER_DEGREE),
        truncate_relations=getattr(args, "truncate_relations", None),
        reduce_rational=getattr(args, "reduce_rational", False),
    )


def _render(payload: Dict[str, Any], output_format: str) -> str:
    if output_format == "glg":
        return str(payload["graph"])
    if output_format == "table":
        return render_table(payload)
    return render_json(payload)


def _report_error(error: str, command: Optional[str], details: Optional[str] = None) -> None:
    response = ErrorResponse(error=error, command=command, details=details)
    print(json.dumps(response.model_dump(), ensure_ascii=False), file=sys.stderr)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    setup_logging(args.log_level)

    command = _command_name(args)
    try:
        config = _config(args, command)
    except ValidationError as exc:
        _report_error("invalid options", command, str(exc))
        return 2
    except UsageError as exc:
        _report_error(str(exc), command)
        return 2

    logger.info(f"Running {command} on {config.inputs or 'generated input'}")
    try:
        payload = HANDLERS[command](args, config)
    except UsageError as exc:
        _report_error(str(exc), command)
        return 2
    except GlgError as exc:
        logger.debug(f"{command} failed: {exc!r}")
        _report_error(str(exc), command, type(exc).__name__)
        return 1
    except OSError as exc:
        _report_error(f"cannot read input: {exc}", command, type(exc).__name__)
        return 1

    sys.stdout.write(_render(payload, config.output_format))
    return 0


def main() -> None:
    """Console script entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
