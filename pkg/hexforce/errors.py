"""Exception hierarchy shared by the library and the CLI"""
from typing import Optional


class HexForceError(Exception):
    """Base class for every error raised by hexforce"""


class InvalidParameterError(HexForceError, ValueError):
    """An argument is outside the domain of the operation"""


class ParseError(HexForceError):
    """A system document could not be parsed.

    Carries either a line/column position (JSON syntax) or a field path (schema).
    """

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
        field: Optional[str] = None,
    ):
        self.line = line
        self.column = column
        self.field = field
        location = ""
        if line is not None:
            location = f" (line {line}, column {column})"
        elif field:
            location = f" (field '{field}')"
        super().__init__(f"{message}{location}")


class UnsupportedGraphError(HexForceError):
    """The graph lacks structure an operation needs (faces, chain labels)"""


class EmptyPolynomialError(HexForceError):
    """The graph has no perfect matching, so its polynomials are undefined"""


class ConsistencyError(HexForceError):
    """Two computation routes disagree or an exact closed form left a residue"""


class CapExceededError(HexForceError):
    """A brute-force computation was refused by the configured caps"""


class MethodMismatchError(HexForceError):
    """The requested method cannot be applied to the requested system"""
