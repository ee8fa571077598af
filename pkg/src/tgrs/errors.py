"""Exception hierarchy shared by every module in the package."""


class TgrsError(Exception):
    """Base class for all errors raised by this package."""


# field construction / arithmetic
class NotPrime(TgrsError, ValueError):
    pass


class ReduciblePolynomial(TgrsError, ValueError):
    pass


class DegreeMismatch(TgrsError, ValueError):
    pass


class NoTableEntry(TgrsError, ValueError):
    pass


class FieldMismatch(TgrsError, ValueError):
    pass


class DivisionByZero(TgrsError, ZeroDivisionError):
    pass


class EOutOfRange(TgrsError, ValueError):
    """Frobenius / Galois exponent outside [0, m)."""


class ElementSyntaxError(TgrsError, ValueError):
    pass


class ValueOutOfField(TgrsError, ValueError):
    pass


# linear algebra / codes
class DimensionMismatch(TgrsError, ValueError):
    pass


class LengthMismatch(DimensionMismatch):
    pass


class ZeroMatrix(TgrsError, ValueError):
    pass


class EnumerationCapExceeded(TgrsError, RuntimeError):
    pass


class CombinatorialCapExceeded(EnumerationCapExceeded):
    pass


class BudgetExceeded(EnumerationCapExceeded):
    pass


# code families
class InvalidSpec(TgrsError, ValueError):
    pass


class DuplicatePoints(InvalidSpec):
    pass


class DimensionOutOfRange(TgrsError, ValueError):
    pass


class Class2Unavailable(TgrsError, ValueError):
    """Second deep-hole class needs 1 + eta * sum(S) != 0."""
