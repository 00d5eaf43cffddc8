"""Exception types shared across the package."""

__all__ = [
    "FuzzyLinSysError",
    "NumericalFailureError",
    "IndexTooLargeError",
    "DimensionMismatchError",
    "ProblemFormatError",
]


class FuzzyLinSysError(Exception):
    """Base class for all errors raised by this package."""


class NumericalFailureError(FuzzyLinSysError):
    """A matrix factorization broke down or a numerical invariant failed."""


class IndexTooLargeError(FuzzyLinSysError):
    """The matrix index exceeds what the requested operation supports."""


class DimensionMismatchError(FuzzyLinSysError):
    """Input shapes are inconsistent with each other or with the operation."""


class ProblemFormatError(FuzzyLinSysError):
    """An input document could not be parsed into a problem."""
