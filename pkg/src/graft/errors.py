"""Exception hierarchy shared by every module.

``DomainError`` subclasses are problems with the mathematical request
(bad parity, a witness that is not one, ...); the CLI maps them to exit 1.
"""

from __future__ import annotations


class GraftError(Exception):
    """Base class for all errors raised by graft."""


class DomainError(GraftError):
    pass


class InvalidGraph(DomainError):
    pass


class EmptyGraph(DomainError):
    pass


class PathTooShort(DomainError):
    pass


class InputNotRegular(DomainError):
    pass


class InputNotConnected(DomainError):
    pass


class InvalidSpec(DomainError):
    pass


class ParityViolation(DomainError):
    def __init__(self, r: int, k: int):
        super().__init__(f"r*k must be even (got r={r}, k={k}, r*k={r * k})")
        self.r = r
        self.k = k


class InfeasibleTrivial(DomainError):
    pass


class BadWitness(DomainError):
    pass


class WrongVertexCount(DomainError):
    def __init__(self, expected: int, actual: int):
        super().__init__(f"extension must have {expected} vertices, got {actual}")
        self.expected = expected
        self.actual = actual


class DegreeMismatch(DomainError):
    def __init__(self, vertex: int, expected: int, actual: int):
        super().__init__(f"vertex {vertex}: expected degree {expected}, got {actual}")
        self.vertex = vertex
        self.expected = expected
        self.actual = actual


class TooLarge(DomainError):
    pass


class ParseError(GraftError):
    """Malformed edge-list input. ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class EdgeListSyntaxError(ParseError):
    pass


class VertexOutOfRange(ParseError):
    pass


class DuplicateEdge(ParseError):
    pass


class SelfLoop(ParseError):
    pass
