"""Exception types shared across the package."""


class BhError(ValueError):
    """Base class for invalid-input errors raised by this package."""


class MixedFields(BhError):
    pass


class DivisionByZero(BhError, ZeroDivisionError):
    pass


class ZeroElement(BhError):
    pass


class ZeroTarget(BhError):
    pass


class NonPrimitiveBase(BhError):
    pass


class NotIrreducible(BhError):
    pass


class TooLarge(BhError):
    """An enumeration or factorization exceeds the configured cap."""

    def __init__(self, message, size=None):
        super().__init__(message)
        self.size = size


class WrongGroup(BhError):
    pass


class NotCoprime(BhError):
    pass


class RootInS(BhError):
    def __init__(self, s):
        super().__init__(f"polynomial vanishes at s={s}; x - s is not a unit")
        self.s = s


class BadDegree(BhError):
    pass


class DegreeOne(BhError):
    pass


class DivisibilityViolation(BhError):
    pass


class NoValidSubfieldCondition(BhError):
    pass


class EmptySet(BhError):
    pass
