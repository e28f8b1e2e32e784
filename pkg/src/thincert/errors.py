"""Shared exception types."""


class GraphFormatError(ValueError):
    """Malformed graph/tree/rotation input. Carries the offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotSpanningTreeError(ValueError):
    """Edge list does not form a spanning tree of the host graph."""


class DisconnectedGraphError(ValueError):
    """Operation requires a connected graph (min cut > 0)."""


class UnboundedCertificateError(RuntimeError):
    """A cut of weight zero crosses the tree: the thinness ratio is unbounded."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class BudgetExceededError(RuntimeError):
    """Enumeration or iteration budget exceeded before completion."""


class VersionMismatchError(RuntimeError):
    """Cached tables refer to a different tree than the one supplied."""


class ConsistencyError(RuntimeError):
    """Internal tables disagree (e.g. a negative cut weight was assembled)."""


class GuardExceededError(ValueError):
    """Brute-force enumeration guard (n <= 20) exceeded without override."""


class EmbeddingError(ValueError):
    """Rotation system is not a valid planar embedding (Euler check failed)."""
