"""Typed domain errors.

Every condition the library can detect and name gets its own class so
callers (and the CLI exit-code mapping) can match on type.  Findings —
mathematical claims that compute to false — are *not* errors; they are
returned in report objects.
"""


class DomainError(Exception):
    """Base class for all typed errors raised by aspec."""


class NotAssociative(DomainError):
    def __init__(self, triple, detail=""):
        self.triple = triple
        super().__init__(f"associativity fails on basis triple {triple} {detail}".strip())


class BadUnit(DomainError):
    def __init__(self, index, side):
        self.index = index
        self.side = side
        super().__init__(f"unit law fails on basis element {index} ({side} side)")


class NotAnIdeal(DomainError):
    pass


class NotSplit(DomainError):
    """A simple quotient is not a full matrix algebra over the rationals."""


class NotSimple(DomainError):
    pass


class DuplicateModule(DomainError):
    pass


class PointNotOnVariety(DomainError):
    pass


class IdempotentsNotPreserved(DomainError):
    pass


class ContractedNotSimple(DomainError):
    pass


class UnknownFixture(DomainError):
    pass
