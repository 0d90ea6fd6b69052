"""Exception taxonomy.

Two families matter downstream: ``ValidationError`` subclasses mean the input
data itself is bad (CLI exit code 2), ``NumericError`` subclasses mean a
floating-point stage could not certify genericity (CLI exit code 3).
"""

from __future__ import annotations

__all__ = [
    "KleinError",
    "ValidationError",
    "NumericError",
    "IdenticalLines",
    "DuplicateLine",
    "MissesDisk",
    "MissesBall",
    "ParallelPair",
    "NotGeneralPosition",
    "NotConnected",
    "LengthMismatch",
    "ShapeMismatch",
    "BadK",
    "BadParams",
    "TBViolation",
    "SplitDiagram",
    "ParseError",
    "PerturbationFailed",
    "GenericityFailure",
    "ToleranceViolation",
    "OddCrossingParity",
    "PushoffCollision",
    "IndeterminateIntersection",
]


class KleinError(Exception):
    """Base class for every library error."""


class ValidationError(KleinError):
    """Bad input data (exact predicates rejected it)."""


class NumericError(KleinError):
    """A floating stage failed to certify genericity or tolerance."""


class IdenticalLines(ValidationError):
    pass


class DuplicateLine(ValidationError):
    def __init__(self, i, j):
        self.i, self.j = i, j
        super().__init__(f"lines {i} and {j} coincide in canonical form")


class MissesDisk(ValidationError):
    def __init__(self, i):
        self.i = i
        super().__init__(f"line {i} does not meet the open unit disk")


class MissesBall(ValidationError):
    def __init__(self, i):
        self.i = i
        super().__init__(f"complex line {i} does not meet the open unit ball")


class ParallelPair(ValidationError):
    def __init__(self, i, j):
        self.i, self.j = i, j
        super().__init__(f"lines {i} and {j} meet exactly on the boundary")


class NotGeneralPosition(ValidationError):
    pass


class NotConnected(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


class ShapeMismatch(ValidationError):
    pass


class BadK(ValidationError):
    pass


class BadParams(ValidationError):
    pass


class TBViolation(ValidationError):
    def __init__(self, t, bound):
        self.t, self.bound = t, bound
        super().__init__(f"framing t={t} exceeds the maximal framing bound {bound}")


class SplitDiagram(ValidationError):
    pass


class ParseError(ValidationError):
    def __init__(self, message, line=None):
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")


class PerturbationFailed(NumericError):
    pass


class GenericityFailure(NumericError):
    def __init__(self, message, trace=()):
        self.trace = tuple(trace)
        super().__init__(message)


class ToleranceViolation(NumericError):
    pass


class OddCrossingParity(NumericError):
    def __init__(self, i, j, total):
        self.i, self.j, self.total = i, j, total
        super().__init__(
            f"signed crossing count between components {i} and {j} is odd ({total})"
        )


class PushoffCollision(NumericError):
    pass


class IndeterminateIntersection(NumericError):
    """An exact test on rationalized floats fell inside the exclusion margin."""
