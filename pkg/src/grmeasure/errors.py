"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class GRError(Exception):
    """Base class for every error raised by this package."""


class PosetError(GRError, ValueError):
    """Malformed poset or unknown element id."""


class LengthFunctionError(GRError, ValueError):
    """A length assignment is not strictly monotone (or not positive)."""

    def __init__(self, message: str, lower=None, upper=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


class OracleBudgetError(GRError):
    """The exhaustive oracle would enumerate too many chains."""


class QuiverSyntaxError(GRError, ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class QuiverValidationError(GRError, ValueError):
    """Duplicate ids, dangling endpoints, bad weights or representation lines."""


class OrientedCycleError(QuiverValidationError):
    def __init__(self, cycle: list[str]):
        super().__init__("oriented cycle: " + " -> ".join(cycle + cycle[:1]))
        self.cycle = cycle


class DisconnectedSupportError(GRError, ValueError):
    """An operation needing an indecomposable (connected) support got a decomposable one."""


class UnsupportedSupportError(GRError, ValueError):
    """Support whose underlying graph is neither a tree nor a cycle."""


class HypothesisError(GRError, ValueError):
    """Input lies outside the scope in which the support translation is valid."""


class FiltrationError(GRError, ValueError):
    """A chain of stages is not a filtration (or a pair is not a cover pair)."""
