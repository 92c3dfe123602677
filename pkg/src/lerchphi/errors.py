"""Exception types raised by the package."""


class InvalidParameterError(ValueError):
    """An argument lies outside the range an operation accepts."""


class DomainError(InvalidParameterError):
    """(z, s, a) lies outside the domain of the integral representation."""


class SizingOverflowError(RuntimeError):
    """The a priori sizing asks for more nodes than ``N_MAX``."""


class EigensolverError(RuntimeError):
    """The tridiagonal QL iteration failed to converge."""


class NoConvergenceError(RuntimeError):
    """A reference computation ran out of terms or panels before meeting its tolerance."""
