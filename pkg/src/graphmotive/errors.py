"""Shared exception types.

Every error raised on purpose by this package derives from GraphMotiveError,
so callers (and the CLI) can distinguish our failures from genuine bugs.
"""

from __future__ import annotations


class GraphMotiveError(Exception):
    pass


class NotPrimePower(GraphMotiveError):
    """Field order is not p^n for a prime p."""


class DivisionByZero(GraphMotiveError, ZeroDivisionError):
    """Inverse of the zero element requested."""


class NotSimple(GraphMotiveError):
    """Operation requires a simple graph (no loops, no parallel edges)."""


class BadVertex(GraphMotiveError):
    """Vertex index out of range."""


class BadParams(GraphMotiveError):
    """Parameters outside the documented contract."""


class BadArgs(BadParams):
    """Nonsensical arguments to a closed-form count (e.g. negative dimension)."""


class TooLarge(GraphMotiveError):
    """Instance exceeds a hard structural limit (not the enumeration budget)."""


class LengthMismatch(GraphMotiveError):
    """Point or vector length does not match the expected dimension."""


class BudgetExceeded(GraphMotiveError):
    """Enumeration would exceed the configured evaluation cap."""

    def __init__(self, required: int, budget: int, what: str = "enumeration"):
        self.required = required
        self.budget = budget
        self.what = what
        super().__init__(
            f"{what} needs {required} evaluations, budget is {budget}"
        )


class NotAForest(GraphMotiveError):
    """Graph has a cycle where a forest is required."""


class InsufficientPoints(GraphMotiveError):
    """Not enough sample points for the requested fit degree."""


class ParseError(GraphMotiveError):
    """Malformed textual input (graph, matroid, or CLI payload)."""
