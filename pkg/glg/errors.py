# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Error hierarchy for GLG.

GlgError deliberately does not derive from ValueError: pydantic wraps
ValueError raised inside validators, while any other exception propagates
unchanged, so graph models surface these errors directly.
"""

from typing import Iterable, List, Optional


class GlgError(Exception):
    """Base class for every domain error raised by the toolkit."""


class GraphParseError(GlgError):
    """Malformed or inconsistent .glg input, with a source location."""

    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class GraphValidationError(GlgError):
    """A graph violates the generalized layered graph invariants."""


class CycleError(GlgError):
    """The underlying directed graph has a cycle."""

    def __init__(self, cycle: Iterable[str]) -> None:
        self.cycle: List[str] = list(cycle)
        super().__init__(f"directed cycle through {' -> '.join(self.cycle)}")


class RankingError(GlgError):
    """A rank assignment is invalid for the graph it is applied to."""


class ExtremalVertexError(GlgError):
    """A unique minimal or maximal vertex is required but missing."""

    def __init__(
        self, kind: str, candidates: Iterable[str], context: Optional[str] = None
    ) -> None:
        self.kind = kind
        self.candidates: List[str] = list(candidates)
        self.context = context
        if self.candidates:
            listed = ", ".join(self.candidates)
            message = f"no unique {kind} vertex: candidates are {listed}"
        else:
            message = f"no unique {kind} vertex: graph is empty"
        if context:
            message = f"{context}: {message}"
        super().__init__(message)


class GeneratorError(GlgError):
    """Invalid parameters for a graph generator."""


class SeriesError(GlgError):
    """Invalid series arithmetic, e.g. inverting a non-unit."""


class PathError(GlgError):
    """A sequence of edges does not form a directed path."""


class PathLimitError(GlgError):
    """Too many parallel paths between a pair of vertices."""

    def __init__(self, source: str, target: str, count: int, limit: int) -> None:
        self.source = source
        self.target = target
        self.count = count
        self.limit = limit
        super().__init__(
            f"{count} paths from {source} to {target} exceed the limit of {limit}"
        )


class MorphismError(GlgError):
    """A vertex/edge map violates the morphism laws."""


class OperationError(GlgError):
    """A graph operation was called outside its preconditions."""


class BudgetExceededError(GlgError):
    """An oracle computation would exceed its configured budget."""

    def __init__(
        self, what: str, degree: int, count: int, budget: int, hint: Optional[str] = None
    ) -> None:
        self.what = what
        self.degree = degree
        self.count = count
        self.budget = budget
        message = f"degree {degree}: {count} {what} exceed the budget of {budget}"
        if hint:
            message = f"{message} ({hint})"
        super().__init__(message)
