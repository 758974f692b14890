"""Exact limit of the nonunimodular root fraction C(P_2n) as n grows.

The limit is the normalized measure of ``{t in [0, 2pi] : |f2(t)| >= 1}``.
Breakpoints (solutions of ``f2 = +-1``) come from the real roots in [-1, 1]
of two polynomials in ``x = cos t``; the intervals between consecutive
breakpoints are classified by the value of ``f2`` at their midpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .polycore import (
    CosineSeries,
    ReciprocalSpec,
    build_f2,
    eval_f2,
    to_chebyshev_algebraic,
)
from .rootiso import RootIsolationError, roots_in_closed_unit

__all__ = [
    "Breakpoint",
    "LimitResult",
    "RootIsolationError",
    "breakpoints",
    "limit_C",
    "limit_of_series",
    "limit_C_closed_quadrinomial",
]

TWO_PI = 2 * math.pi
DEDUP_TOL = 1e-12


@dataclass(frozen=True)
class Breakpoint:
    t: float
    x: float
    level: int
    multiplicity: int

    def to_dict(self) -> dict:
        return {"t": self.t, "x": self.x, "level": self.level, "mult": self.multiplicity}


@dataclass(frozen=True)
class LimitResult:
    """Partition data and value of the limit.

    ``admissible`` lists the closed intervals between consecutive partition
    points on which ``|f2| < 1`` in the interior; ``r`` is their count.
    """

    breakpoints: tuple[Breakpoint, ...]
    admissible: tuple[tuple[float, float], ...]
    admissible_measure: float
    limit: float
    series: CosineSeries | None = field(default=None, compare=False, repr=False)

    @property
    def r(self) -> int:
        return len(self.admissible)

    @property
    def partition(self) -> list[float]:
        """Partition points ``0 = t_0 < ... < t_p = 2pi``."""
        pts = [0.0] + [b.t for b in self.breakpoints if b.t > 0.0]
        return pts + [TWO_PI]

    def to_dict(self) -> dict:
        return {
            "limit": self.limit,
            "measure": self.admissible_measure,
            "breakpoints": [b.to_dict() for b in self.breakpoints],
            "intervals": [[lo, hi] for lo, hi in self.admissible],
        }


def _polish(series: CosineSeries, t: float, level: int) -> float:
    """Newton steps on f2(t) - level directly in t.

    arccos is ill-conditioned near x = +-1; a couple of steps in t recover
    full precision at simple crossings.
    """
    for _ in range(3):
        g = eval_f2(series, t) - level
        dg = sum(-float(a) * f * math.sin(f * t) for f, a in series.harmonics)
        if abs(dg) < 1e-8:
            return t
        step = g / dg
        if abs(step) > 1e-6:
            return t
        t -= step
        if step == 0:
            break
    return t


def breakpoints(series: CosineSeries) -> list[Breakpoint]:
    """All solutions of ``series(t) = +-1`` in [0, 2pi), ascending.

    Multiplicity is the order of contact in t: an interior x-root of
    multiplicity m gives two t-points of multiplicity m, while x = +-1
    (t = 0 or pi) doubles it since cos t is quadratic there.
    """
    if series.is_constant:
        raise ValueError("constant series has no isolated breakpoints")
    out: list[Breakpoint] = []
    for level in (1, -1):
        poly = to_chebyshev_algebraic(series, level)
        for x, mult, _ in roots_in_closed_unit(poly.integer_coeffs()):
            if x >= 1.0:
                out.append(Breakpoint(0.0, 1.0, level, 2 * mult))
            elif x <= -1.0:
                out.append(Breakpoint(math.pi, -1.0, level, 2 * mult))
            else:
                t = math.acos(x)
                if mult == 1:
                    t = _polish(series, t, level)
                out.append(Breakpoint(t, x, level, mult))
                out.append(Breakpoint(TWO_PI - t, x, level, mult))
    out.sort(key=lambda b: b.t)
    for a, b in zip(out, out[1:]):
        if b.t - a.t < DEDUP_TOL:
            raise RootIsolationError(
                f"breakpoints collide at t={a.t!r} (levels {a.level}, {b.level})"
            )
    return out


def _constant_result(series: CosineSeries) -> LimitResult:
    # |f2| <= 1 everywhere: every root unimodular, including |a0| = 2.
    if abs(series.constant) <= 1:
        return LimitResult((), ((0.0, TWO_PI),), TWO_PI, 0.0, series)
    return LimitResult((), (), 0.0, 1.0, series)


def limit_of_series(series: CosineSeries) -> LimitResult:
    """Limit for an arbitrary cosine series (constant series included)."""
    if series.is_constant:
        return _constant_result(series)
    bps = breakpoints(series)
    pts = [0.0] + [b.t for b in bps if b.t > 0.0] + [TWO_PI]
    admissible = []
    for lo, hi in zip(pts, pts[1:]):
        if abs(eval_f2(series, 0.5 * (lo + hi))) < 1:
            admissible.append((lo, hi))
    # Merge touching intervals before summing so full coverage is exactly 2pi.
    measure = 0.0
    run_lo = run_hi = None
    for lo, hi in admissible:
        if run_hi is not None and lo == run_hi:
            run_hi = hi
            continue
        if run_hi is not None:
            measure += run_hi - run_lo
        run_lo, run_hi = lo, hi
    if run_hi is not None:
        measure += run_hi - run_lo
    limit = min(1.0, max(0.0, 1.0 - measure / TWO_PI))
    return LimitResult(tuple(bps), tuple(admissible), measure, limit, series)


def limit_C(spec: ReciprocalSpec) -> LimitResult:
    """Limit of C(P_2n) as n -> infinity for the family ``spec``."""
    return limit_of_series(build_f2(spec))


def limit_C_closed_quadrinomial(a1: int) -> float:
    """Closed form ``2 arccos(1/|a1|) / pi`` for x^2n + a1 x^(n+k) + a1 x^(n-k) + 1."""
    if abs(a1) <= 1:
        raise ValueError(f"closed form needs |a1| > 1, got {a1}")
    return 2 * math.acos(1 / abs(a1)) / math.pi
