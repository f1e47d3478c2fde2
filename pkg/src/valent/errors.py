"""Exception hierarchy for the valent library.

Every domain precondition gets its own class so callers (and the CLI) can
report the violated condition by name.
"""

from __future__ import annotations


class ValentError(Exception):
    """Base class for all errors raised by this library."""


# graph construction / IO

class GraphError(ValentError):
    pass


class LoopEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class InvalidSize(GraphError):
    pass


class MalformedGraph6(GraphError):
    def __init__(self, position: int, reason: str):
        super().__init__(f"malformed graph6 at position {position}: {reason}")
        self.position = position
        self.reason = reason


class UnsupportedSize(GraphError):
    pass


class LengthMismatch(ValentError):
    pass


# valuations / certificates

class ZeroVector(ValentError):
    pass


class EmptyVector(ValentError):
    pass


class NotACertificate(ValentError):
    pass


class NotBivalentAlphabet(ValentError):
    pass


class NotTrivalentAlphabet(ValentError):
    pass


# dense spectra

class NotSymmetric(ValentError):
    pass


class NoConvergence(ValentError):
    def __init__(self, iterations: int):
        super().__init__(f"no convergence after {iterations} sweeps")
        self.iterations = iterations


# search

class TooLarge(ValentError):
    def __init__(self, n: int, bound: int):
        super().__init__(f"graph has {n} vertices, bound is {bound}")
        self.n = n
        self.bound = bound


# transformations

class SameVertex(ValentError):
    pass


class UnequalValues(ValentError):
    pass


class EdgeTouchesSupport(ValentError):
    pass


class NotAnEdge(ValentError):
    pass


class NotOppositeValues(ValentError):
    pass


class ZeroEndpoint(ValentError):
    pass


class NotASoftSquare(ValentError):
    pass


class EdgeAlreadyPresent(ValentError):
    pass


class UnbalancedSupport(ValentError):
    pass


class NotAlternatePerfect(ValentError):
    pass


class EdgeCollision(ValentError):
    pass


class MissingEdge(ValentError):
    pass


class MatchingUnavailable(ValentError):
    pass


# trees

class NotATree(ValentError):
    pass


class NotPerfectMatching(ValentError):
    pass
