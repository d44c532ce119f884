class QTailError(Exception):
    """Base class for computation errors raised by qtail."""


class NonDivisible(QTailError, ArithmeticError):
    pass


class NonUnitLeadingTerm(QTailError, ArithmeticError):
    pass


class DivergentProduct(QTailError, ValueError):
    pass


class DivergentSeries(QTailError, ValueError):
    pass


class OutOfRange(QTailError, ValueError):
    pass


class NotAdmissible(QTailError, ValueError):
    pass


class NotCoprime(QTailError, ValueError):
    pass


class NotAKnot(QTailError, ValueError):
    pass


class BraidSyntaxError(QTailError, ValueError):
    pass


class BraidRangeError(QTailError, ValueError):
    pass


class MethodMismatch(QTailError, ValueError):
    pass
