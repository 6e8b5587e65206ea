# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Graph parser service - reads and writes the .glg text format.

One record per line::

    # comment
    vertex NAME RANK
    edge NAME TAIL HEAD

Edges may refer to vertices declared later in the file; endpoint and rank
checks run once every record has been read, but diagnostics still point at
the offending edge record.
"""

import logging
import re
from typing import Dict, List, Tuple

from glg.errors import GraphParseError
from glg.models.domain.ranked_digraph import Edge, RankedDigraph, is_valid_name

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\S+")
_RANK = re.compile(r"^[0-9]+$")

# (token text, 1-based column)
Token = Tuple[str, int]


def _tokenize(line: str) -> List[Token]:
    return [(match.group(0), match.start() + 1) for match in _TOKEN.finditer(line)]


def _check_name(token: Token, kind: str, line_number: int) -> str:
    text, column = token
    if not is_valid_name(text):
        raise GraphParseError(
            f"invalid {kind} name {text!r} (allowed: letters, digits, '_', '.', '*')",
            line_number,
            column,
        )
    return text


def _parse_rank(token: Token, line_number: int) -> int:
    text, column = token
    if not _RANK.match(text):
        raise GraphParseError(
            f"rank must be a nonnegative base-10 integer, got {text!r}",
            line_number,
            column,
        )
    return int(text)


def parse_graph(text: str) -> RankedDigraph:
    """
    Parse .glg text into a validated RankedDigraph.

    Args:
        text: Contents of a .glg file

    Returns:
        The validated graph

    Raises:
        GraphParseError: With line and column of the offending record
    """
    vertices: Dict[str, int] = {}
    edges: List[Edge] = []
    edge_locations: Dict[str, Tuple[int, List[Token]]] = {}

    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(raw_line)
        if not tokens or tokens[0][0].startswith("#"):
            continue

        keyword, keyword_column = tokens[0]
        if keyword == "vertex":
            if len(tokens) != 3:
                raise GraphParseError(
                    f"expected 'vertex NAME RANK', got {len(tokens) - 1} field(s)",
                    line_number,
                    keyword_column,
                )
            name = _check_name(tokens[1], "vertex", line_number)
            if name in vertices:
                raise GraphParseError(
                    f"duplicate vertex name {name!r}", line_number, tokens[1][1]
                )
            vertices[name] = _parse_rank(tokens[2], line_number)
        elif keyword == "edge":
            if len(tokens) != 4:
                raise GraphParseError(
                    f"expected 'edge NAME TAIL HEAD', got {len(tokens) - 1} field(s)",
                    line_number,
                    keyword_column,
                )
            name = _check_name(tokens[1], "edge", line_number)
            if name in edge_locations:
                raise GraphParseError(
                    f"duplicate edge name {name!r}", line_number, tokens[1][1]
                )
            tail = _check_name(tokens[2], "vertex", line_number)
            head = _check_name(tokens[3], "vertex", line_number)
            edge_locations[name] = (line_number, tokens)
            edges.append(Edge(name=name, tail=tail, head=head))
        else:
            raise GraphParseError(
                f"unknown record type {keyword!r} (expected 'vertex' or 'edge')",
                line_number,
                keyword_column,
            )

    for edge in edges:
        line_number, tokens = edge_locations[edge.name]
        for endpoint, token in ((edge.tail, tokens[2]), (edge.head, tokens[3])):
            if endpoint not in vertices:
                raise GraphParseError(
                    f"edge {edge.name!r} refers to unknown vertex {endpoint!r}",
                    line_number,
                    token[1],
                )
        if vertices[edge.tail] <= vertices[edge.head]:
            raise GraphParseError(
                f"edge {edge.name!r} is not rank-decreasing: "
                f"rank({edge.tail})={vertices[edge.tail]} <= "
                f"rank({edge.head})={vertices[edge.head]}",
                line_number,
                tokens[0][1],
            )

    graph = RankedDigraph(vertices=vertices, edges=tuple(edges))
    logger.debug(f"Parsed graph with {len(vertices)} vertices and {len(edges)} edges")
    return graph


def serialize_graph(graph: RankedDigraph) -> str:
    """Render a graph as .glg text: vertices then edges, in stored order."""
    lines = [f"vertex {name} {rank}" for name, rank in graph.vertices.items()]
    lines.extend(f"edge {edge.name} {edge.tail} {edge.head}" for edge in graph.edges)
    return "\n".join(lines) + "\n"
