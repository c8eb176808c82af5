"""Exception hierarchy shared by every module of the package."""


class MatroidValuationError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameters(MatroidValuationError, ValueError):
    pass


class ElementOutOfRange(MatroidValuationError, ValueError):
    pass


class CardinalityMismatch(MatroidValuationError, ValueError):
    pass


class ExchangeViolation(MatroidValuationError, ValueError):
    """The basis exchange axiom fails; ``witness`` is ``(B1, B2, b1)``."""

    def __init__(self, b1, b2, element):
        self.witness = (tuple(b1), tuple(b2), element)
        super().__init__(
            f"exchange fails for B1={list(b1)}, B2={list(b2)}, b1={element}: "
            f"no b2 in B2-B1 makes B1-b1+b2 a basis"
        )


class InvalidPermutation(MatroidValuationError, ValueError):
    pass


class EmptyMatroid(MatroidValuationError, ValueError):
    pass


class NotABasis(MatroidValuationError, ValueError):
    pass


class ScaleExceeded(MatroidValuationError, ValueError):
    pass


class NonLatticeVertices(MatroidValuationError, ValueError):
    pass


class EmptyPolytope(MatroidValuationError, ValueError):
    pass


class DimensionMismatch(MatroidValuationError, ValueError):
    pass


class NotValidated(MatroidValuationError, ValueError):
    pass


class NotComparable(MatroidValuationError, ValueError):
    pass


class NotALattice(MatroidValuationError, ValueError):
    pass


class InternalDisagreement(MatroidValuationError, AssertionError):
    """Two independent computations of the same quantity disagree."""


class ParseError(MatroidValuationError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
