"""
Exception hierarchy.
Domain errors map to exit code 1, document and IO errors to exit code 2.
"""

from typing import Optional, Sequence

from src.config import settings


class ToolkitError(Exception):
    """
    Base class of every error raised on purpose by the toolkit.
    """

    exit_code: int = settings.EXIT_DOMAIN_ERROR


class FanError(ToolkitError):
    """Invalid fan or lattice input."""


class NotCalabiYauError(FanError):
    """No covector pairs to one with every ray."""


class SurgeryError(ToolkitError):
    """A fan rewrite could not be carried out."""


class ClassTransportError(ToolkitError):
    """A curve class cannot be moved through a surgery step."""


class QRationalError(ToolkitError):
    """Invalid operation on exact rational functions."""


class PoleError(QRationalError):
    """
    The function has a pole at t = 1.
    """

    def __init__(self, order: int):
        super().__init__(f"pole of order {order} at t = 1")
        self.order = order


class ConventionMismatchError(ToolkitError):
    """Extraction produced a non-integer invariant."""


class DegreeCapError(ToolkitError):
    """
    A requested class is not complete at the given box cap.
    """

    def __init__(self, message: str, required_cap: Optional[int] = None,
                 missing: Sequence = ()):
        super().__init__(message)
        self.required_cap = required_cap
        self.missing = tuple(missing)


class QueryError(ToolkitError):
    """Malformed open-invariant query."""


class DocumentError(ToolkitError):
    """
    A fan document could not be read or parsed.
    """

    exit_code: int = settings.EXIT_PARSE_ERROR

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column
