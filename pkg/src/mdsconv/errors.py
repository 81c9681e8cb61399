"""Exception hierarchy shared by all modules.

Every error carries a stable ``code`` (the class name) so the CLI can emit
structured error records.
"""


class MdsConvError(ValueError):
    """Base class for all library errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


# finite fields
class NotPrime(MdsConvError):
    pass


class ReducibleModulus(MdsConvError):
    pass


class DegreeMismatch(MdsConvError):
    pass


class ZeroElement(MdsConvError):
    pass


class NoSuchOrder(MdsConvError):
    pass


# polynomials and polynomial matrices
class BothZero(MdsConvError):
    pass


class AllMinorsZero(MdsConvError):
    pass


class ZeroRow(MdsConvError):
    pass


class RankDeficient(MdsConvError):
    pass


class DimensionMismatch(MdsConvError):
    pass


# code construction
class OrderTooSmall(MdsConvError):
    pass


class NotRightInvertible(MdsConvError):
    pass


class LengthExceedsField(MdsConvError):
    pass


class BadParameters(MdsConvError):
    pass


class PreconditionNotMet(MdsConvError):
    pass


# distances
class JTooSmall(MdsConvError):
    pass


class BudgetExceeded(MdsConvError):
    pass


# parity checks
class OrderMismatch(MdsConvError):
    pass


class BadDelta(MdsConvError):
    pass


# skew polynomial algebra
class NotCoprime(MdsConvError):
    pass


class NotAutomorphism(MdsConvError):
    pass


class RingMismatch(MdsConvError):
    pass


class LengthMismatch(MdsConvError):
    pass


class DeltaZero(MdsConvError):
    pass


class InternalInconsistency(MdsConvError):
    pass


# I/O
class ParseError(MdsConvError):
    pass
