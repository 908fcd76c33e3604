"""Series package re-exports for easy imports from `src.twistdeform.series`."""
from .series import (
    DEFAULT_ORDER,
    GaussianRational,
    IMAG,
    LaurentSeries,
    ONE,
    PARAMETERS,
    Parameter,
    ZERO,
    as_gaussian,
    format_gaussian,
    gaussian,
    series_limit_c_to_infinity,
    series_mul,
)

__all__ = [
    "DEFAULT_ORDER",
    "GaussianRational",
    "IMAG",
    "LaurentSeries",
    "ONE",
    "PARAMETERS",
    "Parameter",
    "ZERO",
    "as_gaussian",
    "format_gaussian",
    "gaussian",
    "series_limit_c_to_infinity",
    "series_mul",
]

# re-export exceptions
from .series import SeriesError, TruncationOrderMismatchError, DivergenceError
__all__.extend(["SeriesError", "TruncationOrderMismatchError", "DivergenceError"])
