"""Exception types raised across the package."""

from __future__ import annotations


class TrimetricError(Exception):
    """Base class for all package errors."""


class GraphInputError(TrimetricError, ValueError):
    """Bad vertex count, out-of-range endpoint, self-loop, or bad family parameters."""


class Graph6ParseError(TrimetricError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UnsupportedFormError(TrimetricError, ValueError):
    """graph6 long form (n > 62) requested."""


class CapError(TrimetricError):
    """An exact exponential-time routine was asked to run past its size cap."""

    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what}: order {n} exceeds cap {cap}")
        self.what = what
        self.n = n
        self.cap = cap


class UndefinedParameterError(TrimetricError, ValueError):
    """The requested parameter is not defined for this graph (disconnected, too small...)."""


class MetricsError(TrimetricError, ValueError):
    def __init__(self, fields: list[str], reason: str = "graph is disconnected"):
        super().__init__(f"{reason}; undefined fields: {', '.join(fields)}")
        self.fields = fields


class RegistryError(TrimetricError, KeyError):
    """Unknown theorem id."""
