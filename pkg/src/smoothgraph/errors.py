"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class GraphError(ValueError):
    """Base class for all errors raised by smoothgraph."""


class IdOutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class Disconnected(GraphError):
    """The operation needs a connected graph."""


class DisconnectedPair(Disconnected):
    pass


class DisconnectedInduced(Disconnected):
    """The induced subgraph on the requested vertex set is not connected."""


class EqualEndpoints(GraphError):
    pass


class EmptySet(GraphError):
    pass


class NotAnEdge(GraphError):
    pass


class TooLarge(GraphError):
    pass


class MalformedGraph6(GraphError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnsupportedSize(GraphError):
    pass


class MalformedEdgeList(GraphError):
    pass


class BadParams(GraphError):
    pass


class GluePartMismatch(GraphError):
    pass


class NotGated(GraphError):
    def __init__(self, message: str, violator: int | None = None, side: int | None = None):
        super().__init__(message)
        self.violator = violator
        self.side = side


class UnknownPredicate(GraphError):
    pass


class UnknownPattern(GraphError):
    pass
