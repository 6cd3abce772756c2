"""
Exceptions
Error hierarchy shared by every package
"""

from typing import Optional


class DeBruijnError(Exception):
    """Base class for all library errors"""


class SpecRejectedError(DeBruijnError, ValueError):
    """Alphabet size / dimension invalid or beyond the supported index range"""


class IndexOutOfRangeError(DeBruijnError, IndexError):
    """Vertex or edge index outside its range"""


class SymbolOutOfRangeError(DeBruijnError, ValueError):
    """A word symbol is negative or not smaller than q"""


class UnsupportedParameterError(DeBruijnError, ValueError):
    """A parameter combination the requested operation does not cover"""


class RangeViolationError(DeBruijnError, ValueError):
    """A numeric argument outside its admissible range"""


class MalformedInputError(DeBruijnError, ValueError):
    """
    Unparsable input file or record

    Args:
        message: What is wrong
        line_number: 1-based line of the offending input, if known
    """

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class GuardExceededError(DeBruijnError, RuntimeError):
    """
    An enumeration guard refused the requested size

    Args:
        what: Name of the enumeration
        requested: Number of states requested
        limit: Configured maximum
    """

    def __init__(self, what: str, requested: int, limit: int):
        self.requested = requested
        self.limit = limit
        super().__init__(f"{what} needs {requested} states, guard allows {limit}")


class BoundsInconsistentError(DeBruijnError, ArithmeticError):
    """A lower bound on gamma(q, d) exceeds the upper bound for the same graph"""
