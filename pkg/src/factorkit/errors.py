"""Exception hierarchy shared across the package."""


class FactorKitError(Exception):
    """Base class for all errors raised by factorkit."""


class Graph6Error(FactorKitError, ValueError):
    """Malformed graph6 input.

    ``offset`` is the byte offset of the offending character.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UnsupportedSizeError(FactorKitError, ValueError):
    """Graph too large for the short graph6 form (n > 62)."""


class ResourceLimitError(FactorKitError):
    """An exhaustive-search cap would be exceeded; no silent approximation."""


class MissingEdgeError(FactorKitError, ValueError):
    """Edge deletion requested for an edge not present in the graph."""


class NoFactorError(FactorKitError):
    """Certificate extraction requested for a graph without the factor."""
