"""Exception types shared across the package."""


class CobwebError(Exception):
    """Base class for every error raised by :mod:`cobwebs`."""


class InvalidParameterError(CobwebError, ValueError):
    pass


class IndexOutOfRangeError(CobwebError, IndexError):
    pass


class InadmissibleError(CobwebError, ArithmeticError):
    """An F-nomial quotient is not an integer."""

    def __init__(self, n, k, numerator=None, denominator=None):
        self.n = n
        self.k = k
        self.numerator = numerator
        self.denominator = denominator
        msg = f"F-nomial ({n}, {k}) is not integral"
        if numerator is not None:
            msg += f": {numerator}/{denominator}"
        super().__init__(msg)


class FormMismatchError(CobwebError, ValueError):
    pass


class InsufficientPrefixError(CobwebError, IndexError):
    pass


class NotUnitriangularError(CobwebError, ValueError):
    pass


class CapExceededError(CobwebError, OverflowError):
    def __init__(self, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(f"layer has {size} maximal chains, above the cap of {cap}")
