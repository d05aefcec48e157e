"""
Exception types for the arrangement homotopy toolkit.

Input and hypothesis problems derive from ``ValueError`` and map to exit
code 2 on the command line; broken internal invariants derive from
``RuntimeError`` and map to exit code 1.
"""
from typing import Optional, Tuple, Union


class ArrangementError(Exception):
    """Base class for every error raised by this package."""


class HypothesisError(ArrangementError, ValueError):
    """The input violates a standing hypothesis (codim >= 2, geometric lattice, ...)."""


class ArrangementParseError(HypothesisError):
    """
    An arrangement file could not be parsed.

    Attributes:
        line (Optional[int]): 1-based line of the problem, when known
        column (Optional[int]): 1-based column of the problem, when known
        path (Tuple[Union[str, int], ...]): keys and indices leading to the offending
            JSON value; empty for syntax errors and unreadable files
    """

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None,
                 path: Tuple[Union[str, int], ...] = ()):
        self.line = line
        self.column = column
        self.path = tuple(path)
        self.detail = message
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class NonGeometricLatticeError(HypothesisError):
    """
    The intersection lattice is not geometric.

    Attributes:
        pair (Tuple[str, str]): labels of the offending lattice elements
    """

    def __init__(self, message: str, pair: Tuple[str, ...] = ()):
        self.pair = pair
        super().__init__(message)


class ResourceLimitError(HypothesisError):
    """A configured size guard (atom count, generator cap) was exceeded."""


class ConfigurationError(HypothesisError):
    """An environment setting has an invalid value."""


class InvariantError(ArrangementError, RuntimeError):
    """An internal consistency check failed; indicates a bug, never bad input."""
