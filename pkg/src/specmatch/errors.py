"""Exception types shared across the package."""


class SpecmatchError(Exception):
    """Base class for all errors raised by specmatch."""


class GraphError(SpecmatchError, ValueError):
    """Invalid graph data (bad vertex index, loop, asymmetric adjacency)."""


class Graph6Error(SpecmatchError, ValueError):
    """Malformed graph6 text."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class DomainError(SpecmatchError, ValueError):
    """A parameter lies outside the domain of a formula or check."""


class NotBipartiteError(SpecmatchError, ValueError):
    pass


class ConvergenceError(SpecmatchError, ArithmeticError):
    """An iterative eigen-solver hit its iteration cap."""

    def __init__(self, message: str, off_norm: float):
        super().__init__(f"{message}; off-diagonal norm reached {off_norm:.3e}")
        self.off_norm = off_norm
