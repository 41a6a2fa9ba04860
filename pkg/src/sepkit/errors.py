"""Exception types shared across sepkit."""

from __future__ import annotations


class SepkitError(Exception):
    """Base class for all sepkit errors."""


class NotASeparator(SepkitError):
    """Raised when a vertex set fails to separate the given terminals."""


class PreconditionViolated(SepkitError):
    """Raised when an operation is called outside its contract."""


class InvalidPathSet(SepkitError):
    """Raised when a path family violates vertex-disjointness or endpoints."""


class TooLarge(SepkitError):
    """Every admissible separator exceeds the budget k.

    Carries the saturating path packing as a witness that the minimum
    cut is larger than k.
    """

    def __init__(self, witness=None):
        super().__init__("minimum separator exceeds budget")
        self.witness = witness


class Infeasible(SepkitError):
    """No admissible separator exists at all (e.g. X∩Y is forced out)."""


class TooBig(SepkitError):
    """Instance exceeds a brute-force oracle's hard size guard."""


class ParseError(SepkitError):
    """Malformed .gr/.td input; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ValidationError(SepkitError):
    """A parsed tree decomposition fails validation against its graph."""


class EmptyDecomposition(SepkitError):
    """Width is undefined for a decomposition with no bags."""


class InvalidBudget(SepkitError):
    """The treewidth decomposer requires k >= 2."""


class InvalidInput(SepkitError):
    """Generic invalid argument (bad fixture parameters, bad TD for to_nice)."""
