"""Isoperimetric profiles, the sequences they induce and their piecewise-affine companions."""

from .errors import ProfileError
from .hypotheses import (
    diagonal_series,
    diagonal_series_of,
    exponent_fit,
    f_bar_band,
    hypothesis_report,
    summability,
    z_series,
)
from .piecewise import (
    DEFAULT_DELTA,
    PiecewiseAffine,
    bar_f,
    bar_rho,
    contraction_inequality_holds,
    f_bar_map,
    inverse_doubling_holds,
    rho_bar_map,
    rho_bij,
    rho_bij_inverse,
    rho_bij_map,
    scaling_inequality_holds,
)
from .profiles import build_sequences, evaluate_rho, f_of, in_class, log_of, log_rho, sample_grid

__all__ = [
    "DEFAULT_DELTA",
    "PiecewiseAffine",
    "ProfileError",
    "bar_f",
    "bar_rho",
    "build_sequences",
    "contraction_inequality_holds",
    "diagonal_series",
    "diagonal_series_of",
    "evaluate_rho",
    "exponent_fit",
    "f_bar_band",
    "f_bar_map",
    "f_of",
    "hypothesis_report",
    "in_class",
    "inverse_doubling_holds",
    "log_of",
    "log_rho",
    "rho_bar_map",
    "rho_bij",
    "rho_bij_inverse",
    "rho_bij_map",
    "sample_grid",
    "scaling_inequality_holds",
    "summability",
    "z_series",
]
