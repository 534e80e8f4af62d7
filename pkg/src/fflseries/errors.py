"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`FFLError`.
Several of them signal that an identity which must hold exactly has been
violated; those are never caught internally.
"""


class FFLError(Exception):
    """Base class for all package errors."""


class NotPrime(FFLError, ValueError):
    pass


class ReducibleModulus(FFLError, ValueError):
    pass


class DegreeMismatch(FFLError, ValueError):
    pass


class FieldMismatch(FFLError, ValueError):
    """Operands live over different finite fields."""


class NonExactDivision(FFLError, ArithmeticError):
    """A division that must be exact left a remainder."""


class ZeroDenominator(FFLError, ZeroDivisionError):
    pass


class TooLarge(FFLError, ValueError):
    """An enumeration would exceed the configured size limit."""


class BoundTooSmall(FFLError, ValueError):
    """A linear map is not specified on enough powers of theta."""


class CutoffNotStabilized(FFLError, ArithmeticError):
    """Guard coefficients past the degree bound were nonzero."""


class UnexpectedHigherOrder(FFLError, ArithmeticError):
    """Both the value and the x-derivative vanish at x = 1."""


class NotLinear(FFLError, ValueError):
    """A polynomial expected to be F_q-linear is not."""


class DegreeTooHigh(FFLError, ValueError):
    pass
