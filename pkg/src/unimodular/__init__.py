"""Limits of the nonunimodular root fraction of reciprocal polynomial families.

The family ``P_2n(x) = x^n (x^n + a0 + x^-n + sum a_j (x^j + x^-j))`` has a
fraction of roots off the unit circle that converges as ``n`` grows.  The
limit is computed exactly from the breakpoints of a fixed cosine series,
estimated by grid sampling, and cross-checked against brute-force root
counts.
"""

from .bivariate import LaurentSpec2, boyd_convergence, lc_2d, lc_section
from .limit_exact import LimitResult, limit_C, limit_C_closed_quadrinomial, limit_of_series
from .limit_numeric import SampleEstimate, approx_C, approx_C_kernel, approx_series
from .polycore import CosineSeries, ReciprocalSpec, SpecParseError, build_f2, expand_P2n
from .root_oracle import census, convergence_table, intersection_count
from .search import SearchSpace, conjecture_check, search_min

__all__ = [
    "CosineSeries",
    "LaurentSpec2",
    "LimitResult",
    "ReciprocalSpec",
    "SampleEstimate",
    "SearchSpace",
    "SpecParseError",
    "approx_C",
    "approx_C_kernel",
    "approx_series",
    "boyd_convergence",
    "build_f2",
    "census",
    "conjecture_check",
    "convergence_table",
    "expand_P2n",
    "intersection_count",
    "lc_2d",
    "lc_section",
    "limit_C",
    "limit_C_closed_quadrinomial",
    "limit_of_series",
    "search_min",
]

__version__ = "0.1.0"
