"""Exception hierarchy.

Everything raised on purpose by this library derives from :class:`DimcurseError`,
so callers can fence the whole library with one except clause. Where a builtin
category fits, the subclass inherits it too (ValueError, ArithmeticError), so
untyped callers keep conventional semantics.
"""


class DimcurseError(Exception):
    """Base class for all dimcurse errors."""


class ValidationError(DimcurseError, ValueError):
    """An argument violates the contract of the operation."""


class ParameterError(ValidationError):
    """A scalar parameter is outside its allowed range."""


class DimensionMismatchError(ValidationError):
    """Vector or matrix shapes are incompatible."""


class InsufficientDataError(DimcurseError, ValueError):
    """The operation needs more samples than the dataset provides."""


class DegenerateInputError(DimcurseError, ValueError):
    """Input is degenerate for the requested statistic (zero norm, zero spectrum)."""


class DataFormatError(DimcurseError):
    """A tabular file cannot be parsed into a dataset."""


class NumericalFailureError(DimcurseError, ArithmeticError):
    """An iterative numerical method failed to converge."""


class NotFittedError(DimcurseError, AttributeError):
    """An estimator was used before calling fit()."""
