"""Exception types shared across the package."""


class PolycondError(Exception):
    """Base class for all errors raised by polycond."""


class InvalidInput(PolycondError, ValueError):
    """Malformed or out-of-domain input (non-finite entries, bad shapes, ...)."""


class DocumentError(InvalidInput):
    """A polynomial document failed validation; message names the offending field."""


class NotRegular(PolycondError):
    """The matrix polynomial has identically zero determinant."""


class NotAnEigenvalue(PolycondError):
    """The given projective point is not (numerically) an eigenvalue."""


class NotSimple(PolycondError):
    """Operation requires a simple eigenvalue."""


class UndefinedCondition(PolycondError):
    """A condition number was requested where it is not defined."""


class UndefinedForInfinite(UndefinedCondition):
    """Absolute condition number requested at an infinite eigenvalue."""


class UndefinedForZeroOrInfinite(UndefinedCondition):
    """Relative condition number requested at a zero or infinite eigenvalue."""


class UndefinedForPoint(UndefinedCondition):
    """No member of the requested quantity is defined at this point."""


class PencilOnly(InvalidInput):
    """Operation is restricted to grade-1 polynomials (pencils)."""


class AmbiguousMatch(PolycondError):
    """Two perturbed eigenvalues are comparably close; nearest-match is unreliable."""


class NonFinite(PolycondError):
    """A perturbed problem lost regularity or produced non-finite quantities."""


class NumericalError(PolycondError):
    """A numerical kernel failed an internal consistency check."""
