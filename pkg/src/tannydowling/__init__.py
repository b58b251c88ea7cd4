"""Exact arithmetic for geometric, Whitney and noncentral Tanny-Dowling numbers and polynomials."""

from .arith import binomial, factorial, format_rational, int_pow, parse_rational
from .fps import TruncatedSeries, egf_values, exp_linear, ftilde_egf, mul, reciprocal
from .identities import CATALOG, Grid, IdentityParams, IdentityReport, check_identity, run_suite
from .polynomials import (
    Polynomial,
    derivative_recurrence_step,
    eval_poly,
    geometric_number,
    geometric_polynomial,
    geometric_two_variable,
    noncentral_td,
    tanny_dowling,
)
from .series import Enclosure, ftilde_series, geometric_series_value
from .triangles import noncentral_whitney, stirling2, translated_whitney, whitney

__version__ = "0.1.0"
