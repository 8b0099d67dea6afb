"""Radii of starlikeness and convexity of normalized regular Coulomb wave
functions: series evaluation, real-zero localization, certified transcendental
solvers, Rayleigh-sum bounds, and complex parameter-region checks."""

from .errors import (
    ConvergenceError,
    CoulombDomainError,
    CoulombError,
    DegenerateRecurrenceError,
    DegenerateZeroError,
    MonotonicityError,
    PoleError,
)
from .params import CoulombParams
from .series import (
    CoefficientTable,
    SeriesValue,
    bessel_j,
    coefficients,
    conv_ratio,
    eval_point,
    eval_series,
    normalization_constant,
    star_ratio,
)

__all__ = [
    "ConvergenceError",
    "CoulombDomainError",
    "CoulombError",
    "CoulombParams",
    "CoefficientTable",
    "DegenerateRecurrenceError",
    "DegenerateZeroError",
    "MonotonicityError",
    "PoleError",
    "SeriesValue",
    "bessel_j",
    "coefficients",
    "conv_ratio",
    "eval_point",
    "eval_series",
    "normalization_constant",
    "star_ratio",
]

__version__ = "0.1.0"
