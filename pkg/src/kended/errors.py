"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class KendedError(Exception):
    """Base class; the CLI maps every subclass to exit status 2."""


class ParameterError(KendedError, ValueError):
    """Malformed family or operation parameters."""


class ParseError(KendedError, ValueError):
    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class SizeError(KendedError, ValueError):
    """Input exceeds a configured size guard."""


class SamplingError(KendedError, RuntimeError):
    pass


class ConnectivityError(KendedError, ValueError):
    pass


class TreeError(KendedError, ValueError):
    """A vertex/edge set violates the subtree invariants."""


class NoBranchVertexError(KendedError, ValueError):
    pass


class PreconditionError(KendedError, ValueError):
    pass


class InvalidExchangeError(KendedError, ValueError):
    """An edge exchange produced a disconnected or cyclic edge set."""


class InstanceError(KendedError, ValueError):
    """Invalid theorem/parameter combination."""
