"""Exception and warning types shared by every module."""


class PrimeCFError(Exception):
    """Base class for all library errors."""


class DomainError(PrimeCFError, ValueError):
    """Argument outside the domain of a function."""


class ZeroConstantTerm(DomainError):
    pass


class NotRevertible(DomainError):
    pass


class UnknownSequence(DomainError, KeyError):
    pass


class IndexOutOfRange(DomainError, IndexError):
    pass


class TooShort(DomainError):
    pass


class DegenerateMoments(PrimeCFError, ArithmeticError):
    """A Hankel determinant of the moment sequence vanished."""

    def __init__(self, message, partial=()):
        super().__init__(message)
        self.partial = tuple(partial)


class SingularSystem(PrimeCFError, ArithmeticError):
    pass


class NotProperAtInfinity(DomainError):
    pass


class CfracPole(DomainError, ZeroDivisionError):
    pass


class LimitTooLarge(DomainError):
    pass


class OutOfRange(DomainError):
    pass


class GridOutOfRange(DomainError):
    pass


class PrecisionLoss(PrimeCFError, ArithmeticError):
    """Raised when a double-precision computation cannot resolve its target."""


class PrecisionLossWarning(RuntimeWarning):
    pass


class NotStieltjesWarning(RuntimeWarning):
    """An S-fraction coefficient is not strictly positive."""
