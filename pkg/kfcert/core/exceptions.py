# kfcert/core/exceptions.py
"""Exception hierarchy shared by every kfcert module."""

from typing import Optional, TYPE_CHECKING

if TYPE_CHECKING:
    from .data_models import SpectralEstimate


class KFCertError(Exception):
    """Base class for all errors raised by kfcert."""


class InvalidGraphError(KFCertError):
    """Raised when a graph argument is rejected (loops, bad vertices, wrong shape)."""


class InvalidParametersError(KFCertError):
    """Raised when integer parameters (n, t, k, l) violate an operation's precondition."""


class Graph6ParseError(KFCertError):
    """Malformed graph6 input; ``offset`` is the byte position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class EdgeListParseError(KFCertError):
    """Malformed edge-list input; ``line`` is 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(f"{message} (line {line})")
        self.line = line


class SpectralConvergenceError(KFCertError):
    """Power iteration ran out of budget before the residual met the tolerance."""

    def __init__(self, message: str, estimate: Optional["SpectralEstimate"] = None):
        super().__init__(message)
        self.estimate = estimate


class ConfigurationError(KFCertError):
    """Invalid campaign configuration (file, YAML/JSON syntax or schema)."""
