"""Exception hierarchy shared by every module of the package."""


class ScrollReesError(Exception):
    """Base class for all errors raised by scrollrees."""


class InvalidPartition(ScrollReesError, ValueError):
    pass


class BarUndefined(ScrollReesError, ValueError):
    pass


class IndexOutOfRange(ScrollReesError, IndexError):
    pass


class BadIndices(ScrollReesError, ValueError):
    pass


class SpecMismatch(ScrollReesError, ValueError):
    """Operands live in polynomial rings built for different scrolls."""


class ZeroPolynomial(ScrollReesError, ValueError):
    pass


class ZeroDivisor(ScrollReesError, ValueError):
    """A division basis contains the zero polynomial."""


class BudgetExceeded(ScrollReesError, RuntimeError):
    pass


class PairBudgetExceeded(BudgetExceeded):
    pass


class BoundExceeded(BudgetExceeded):
    pass


class ConstraintViolated(ScrollReesError, ValueError):
    pass


class AmbientMismatch(ScrollReesError, ValueError):
    pass


class UnsupportedM(ScrollReesError, ValueError):
    pass
