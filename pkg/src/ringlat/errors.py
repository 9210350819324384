"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class RingLatError(Exception):
    """Base class for all library errors."""


class DivisionByZero(RingLatError, ZeroDivisionError):
    pass


class DescriptorMismatch(RingLatError):
    pass


class UnsupportedTower(RingLatError):
    pass


class InfiniteField(RingLatError):
    pass


class NotIrreducible(RingLatError):
    pass


class AxiomViolation(RingLatError):
    """An algebra table breaks one of the commutative-unital-associative axioms."""

    def __init__(self, message: str, witness: tuple[int, ...]):
        super().__init__(message)
        self.witness = witness


class NotCommutative(AxiomViolation):
    pass


class NotAssociative(AxiomViolation):
    pass


class BadUnit(AxiomViolation):
    pass


class ParentMismatch(RingLatError):
    pass


class FieldMismatch(RingLatError):
    pass


class NotAnIdeal(RingLatError):
    pass


class NotASubalgebra(RingLatError):
    pass


class ScanCapExceeded(RingLatError):
    pass


class NodeCapExceeded(RingLatError):
    pass


class UnsupportedDecomposition(RingLatError):
    pass


class NotAMinimalStep(RingLatError):
    pass


class InvalidPrecondition(RingLatError):
    pass


class PreconditionFailed(RingLatError):
    def __init__(self, clause: str, message: str = ""):
        super().__init__(f"{clause}: {message}" if message else clause)
        self.clause = clause


class TooManyAtoms(RingLatError):
    pass


class UnknownExample(RingLatError):
    pass
