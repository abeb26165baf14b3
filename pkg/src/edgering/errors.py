class EdgeRingError(Exception):
    """Base class for every error raised by this package."""


class GraphFormatError(EdgeRingError):
    """A graph file could not be parsed. ``line`` is 1-based, or None."""

    def __init__(self, kind: str, message: str, line: int | None = None):
        self.kind = kind
        self.line = line
        where = f" at line {line}" if line is not None else ""
        super().__init__(f"{kind}{where}: {message}")


class GraphError(EdgeRingError):
    """The graph violates a precondition (disconnected, not 2-connected, ...)."""


class GuardExceeded(EdgeRingError):
    """A configured size guard would be exceeded."""


class InternalInconsistency(EdgeRingError):
    """A computed quantity contradicts a proven identity; results are unusable."""
