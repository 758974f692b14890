"""Uniform-grid estimates of the limit: count samples where |f2| > 1.

Samples sit at ``2*pi*j/p`` for ``j = 1..p``.  Counts are integers, so
results are exactly reproducible and can be sharded over ``j`` freely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Literal

import numpy as np

from .polycore import (
    CosineSeries,
    ReciprocalSpec,
    build_f2,
    eval_f2,
    eval_kernel_even,
    eval_kernel_odd,
)

__all__ = [
    "SampleEstimate",
    "approx_C",
    "approx_series",
    "approx_C_kernel",
    "count_exceedances",
    "sample_points",
    "MAX_HARMONICS",
]

CHUNK = 1 << 20
# Beyond this many harmonics the direct sum costs O(harmonics * p); the
# all-ones odd/even families must go through the closed-form kernels.
MAX_HARMONICS = 10_000


@dataclass(frozen=True)
class SampleEstimate:
    hits: int
    samples: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.hits, self.samples)

    @property
    def value(self) -> float:
        return self.hits / self.samples

    def __str__(self) -> str:
        return f"{self.hits}/{self.samples}"

    def to_dict(self) -> dict:
        return {"hits": self.hits, "samples": self.samples, "rational": str(self), "value": self.value}


def sample_points(p: int, start: int = 1, stop: int | None = None) -> np.ndarray:
    """Grid points ``2*pi*j/p`` for ``start <= j < stop`` (default ``j <= p``)."""
    stop = p + 1 if stop is None else stop
    return 2 * np.pi * np.arange(start, stop, dtype=np.float64) / p


def count_exceedances(func: Callable[[np.ndarray], np.ndarray], p: int, start: int = 1, stop: int | None = None) -> int:
    """Number of grid indices j in [start, stop) with ``|func(2 pi j / p)| > 1``."""
    stop = p + 1 if stop is None else stop
    total = 0
    for lo in range(start, stop, CHUNK):
        hi = min(lo + CHUNK, stop)
        total += int(np.count_nonzero(np.abs(func(sample_points(p, lo, hi))) > 1.0))
    return total


def approx_series(series: CosineSeries, p: int) -> SampleEstimate:
    if p < 1:
        raise ValueError("p must be positive")
    if len(series.harmonics) >= MAX_HARMONICS:
        raise ValueError(
            f"{len(series.harmonics)} harmonics: use approx_C_kernel for long all-ones families"
        )
    return SampleEstimate(count_exceedances(lambda t: eval_f2(series, t), p), p)


def _kernel_family(spec: ReciprocalSpec) -> tuple[str, int] | None:
    m = len(spec.terms)
    if m == 0 or any(a != 1 for a in spec.coeffs):
        return None
    if spec.a0 == 0 and spec.offsets == tuple(range(1, 2 * m, 2)):
        return "odd", m
    if spec.a0 == 1 and spec.offsets == tuple(range(2, 2 * m + 1, 2)):
        return "even", m
    return None


def approx_C(spec: ReciprocalSpec, p: int) -> SampleEstimate:
    """Grid estimate of the limit for ``spec`` with p samples.

    Very long all-ones odd/even families are routed to the kernel path.
    """
    if len(spec.terms) >= MAX_HARMONICS:
        fam = _kernel_family(spec)
        if fam is not None:
            return approx_C_kernel(fam[0], fam[1], p)
    return approx_series(build_f2(spec), p)


def approx_C_kernel(family: Literal["odd", "even"], m: int, p: int) -> SampleEstimate:
    """Grid estimate for the all-ones families, O(p) regardless of m.

    ``odd``:  f2 = -(cos t + cos 3t + ... + cos(2m-1)t)
    ``even``: f2 = -(1/2 + cos 2t + ... + cos 2mt)
    """
    if m < 1 or p < 1:
        raise ValueError("m and p must be positive")
    if family == "odd":
        kernel = eval_kernel_odd
    elif family == "even":
        kernel = eval_kernel_even
    else:
        raise ValueError(f"unknown kernel family {family!r}")
    return SampleEstimate(count_exceedances(lambda t: kernel(m, t), p), p)


def error_bound(n_breakpoints: int, p: int) -> float:
    """Worst-case grid error: each breakpoint misplaces at most one sample."""
    return (n_breakpoints + 1) / p if p else math.inf
