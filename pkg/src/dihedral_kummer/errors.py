"""Exception hierarchy.

Every error raised on purpose by the library derives from ``KummerError`` so
callers (and the CLI) can separate validation failures from programming bugs.
"""


class KummerError(Exception):
    pass


class DegreeError(KummerError, ValueError):
    pass


class ZeroPolynomialError(KummerError, ValueError):
    pass


class FieldMismatchError(KummerError, ValueError):
    pass


class SquareRadicandError(KummerError, ValueError):
    """Raised when a quadratic extension is requested for a rational square."""


class SingularCurveError(KummerError, ValueError):
    pass


class PointValidationError(KummerError, ValueError):
    pass


class KernelOrderError(KummerError, ValueError):
    pass


class DomainMismatchError(KummerError, ValueError):
    pass


class InvalidParametersError(KummerError, ValueError):
    pass


class InfinityError(KummerError, ValueError):
    """An operation needs an affine point but got the point at infinity."""


class ConjugationError(KummerError, ArithmeticError):
    """A value expected to be rational kept a nonzero sqrt(d) component."""


class PoleError(KummerError, ZeroDivisionError):
    pass


class ShapeError(KummerError, ValueError):
    pass


class DecompositionNotFound(KummerError, LookupError):
    pass


class EmptyQuotient(KummerError, ValueError):
    pass


class BaseReducibleFlag(KummerError, ValueError):
    """The base point lies in the image subgroup, so it has no order-l class."""
