"""Brute-force checks on concrete family members.

Two independent counts of the unimodular roots of P_2n:

* ``census``: all complex roots by simultaneous (Aberth-Ehrlich) iteration,
  classified by modulus;
* ``intersection_count``: zeros of ``h(t) = cos(nt) - f2(t)`` on [0, 2pi),
  scanned branch by branch of cos(nt), with multiplicities.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import brentq

from .limit_exact import limit_C
from .polycore import ReciprocalSpec, expand_P2n

__all__ = [
    "RootFindingError",
    "UncertainCountError",
    "Roots",
    "RootCensus",
    "all_roots",
    "census",
    "intersection_count",
    "convergence_table",
]

log = logging.getLogger(__name__)

GOLDEN_ANGLE = math.pi * (3 - math.sqrt(5))
SUBGRID = 64


class RootFindingError(ArithmeticError):
    def __init__(self, message: str, failed: Sequence[int] = ()):
        super().__init__(message)
        self.failed = list(failed)


class UncertainCountError(ArithmeticError):
    def __init__(self, message: str, branches: Sequence[int] = ()):
        super().__init__(message)
        self.branches = list(branches)


@dataclass(frozen=True)
class Roots:
    values: np.ndarray
    residuals: np.ndarray
    iterations: int


def all_roots(
    coeffs: Sequence[int],
    radius: float | None = None,
    max_iter: int = 2000,
) -> Roots:
    """All complex roots of ``sum coeffs[i] x^i`` by Aberth-Ehrlich iteration.

    Starting points lie on a circle (default radius from the coefficient
    sizes) with golden-angle spacing.  Roots whose correction drops below
    machine precision are frozen; the rest keep iterating.
    """
    c = np.trim_zeros(np.asarray(coeffs, dtype=float), "b")
    deg = len(c) - 1
    if deg < 1:
        raise ValueError("polynomial must have degree >= 1")
    desc = c[::-1]
    ddesc = np.polyder(desc)
    if radius is None:
        radius = (1.0 + np.sum(np.abs(c[:-1])) / abs(c[-1])) ** (1.0 / deg)
    angles = GOLDEN_ANGLE * np.arange(deg) + 0.4
    z = radius * np.exp(1j * angles)
    active = np.ones(deg, dtype=bool)
    threshold = 1e-12 * np.linalg.norm(c)
    it = 0
    for it in range(1, max_iter + 1):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        za = z[idx]
        pz = np.polyval(desc, za)
        dpz = np.polyval(ddesc, za)
        diff = za[:, None] - z[None, :]
        diff[np.arange(idx.size), idx] = 1.0
        inv = 1.0 / diff
        inv[np.arange(idx.size), idx] = 0.0
        s = inv.sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pz / dpz
            w = ratio / (1.0 - ratio * s)
        w = np.where(np.isfinite(w), w, 0.0)
        z[idx] = za - w
        done = (np.abs(w) <= 4 * np.finfo(float).eps * np.abs(z[idx])) | (pz == 0)
        active[idx[done]] = False
    residuals = np.abs(np.polyval(desc, z))
    failed = np.flatnonzero(active & (residuals > threshold))
    if failed.size:
        raise RootFindingError(
            f"{failed.size} roots did not converge after {max_iter} iterations", failed.tolist()
        )
    return Roots(z, residuals, it)


@dataclass(frozen=True)
class RootCensus:
    n: int
    U: int
    I: int
    E: int
    tolerance: float
    min_margin: float
    roots: np.ndarray = field(repr=False, compare=False, default=None)

    @property
    def C(self) -> Fraction:
        return Fraction(self.I + self.E, 2 * self.n)

    @property
    def warn(self) -> bool:
        return self.min_margin < 10 * self.tolerance

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "U": self.U,
            "I": self.I,
            "E": self.E,
            "C": float(self.C),
            "C_rational": f"{self.I + self.E}/{2 * self.n}",
            "tolerance": self.tolerance,
            "min_margin": self.min_margin if math.isfinite(self.min_margin) else None,
            "warn": self.warn,
        }

    def root_rows(self) -> list[tuple[float, float, float, str]]:
        rows = []
        for z in self.roots:
            mod = abs(z)
            if abs(mod - 1) < self.tolerance:
                cls = "unimodular"
            else:
                cls = "inside" if mod < 1 else "outside"
            rows.append((z.real, z.imag, mod, cls))
        return rows


def census(spec: ReciprocalSpec, n: int, tol: float = 1e-6) -> RootCensus:
    """Count unimodular, inside and outside roots of P_2n."""
    coeffs = expand_P2n(spec, n)
    radius = (abs(spec.a0) + sum(abs(a) for a in spec.coeffs) + 1) ** (1 / (2 * n))
    z = all_roots(coeffs, radius=radius).values
    dev = np.abs(z) - 1
    uni = np.abs(dev) < tol
    U = int(uni.sum())
    I = int(((dev < 0) & ~uni).sum())
    E = int(((dev > 0) & ~uni).sum())
    margin = float(np.abs(dev[~uni]).min()) if (~uni).any() else math.inf
    result = RootCensus(n, U, I, E, tol, margin, z)
    if result.warn:
        log.warning("census %s n=%d: nonunimodular root within %.3g of the circle", spec, n, margin)
    if I != E:
        log.warning("census %s n=%d: I=%d != E=%d", spec, n, I, E)
    return result


class _Gap:
    """h(t) = cos(nt) - f2(t) = cos(nt) + a0/2 + sum a_j cos(jt), with derivatives."""

    def __init__(self, spec: ReciprocalSpec, n: int):
        self.n = n
        self.freqs = np.array([n] + list(spec.offsets), dtype=float)
        self.amps = np.array([1.0] + [float(a) for a in spec.coeffs])
        self.const = spec.a0 / 2

    def d(self, t, k: int = 0):
        """k-th derivative of h at t (scalar or array)."""
        phase = k * math.pi / 2
        scale = self.amps * self.freqs**k
        t = np.asarray(t, dtype=float)
        val = np.cos(np.multiply.outer(t, self.freqs) + phase) @ scale
        if k == 0:
            val = val + self.const
        return float(val) if val.ndim == 0 else val

    def scale(self, k: int) -> float:
        return float(np.sum(np.abs(self.amps) * self.freqs**k)) + (abs(self.const) if k == 0 else 0.0)

    def multiplicity(self, t: float, max_order: int = 6) -> int:
        for k in range(1, max_order + 1):
            if abs(self.d(t, k)) > 1e-7 * self.scale(k):
                return k
        return max_order


ZERO_TOL = 1e-9


def _sgn(v: float) -> int:
    if abs(v) <= ZERO_TOL:
        return 0
    return 1 if v > 0 else -1


class _BranchScanner:
    def __init__(self, h: _Gap, max_depth: int = 4):
        self.h = h
        self.max_depth = max_depth

    def _inner_slope(self, t: float, width: float, toward_right: bool) -> tuple[float, float]:
        """Point just inside the subinterval and the sign-reliable slope there."""
        d1 = self.h.d(t, 1)
        if abs(d1) > 1e-9 * self.h.scale(1):
            return t, d1
        step = width * 1e-3
        tt = t + step if toward_right else t - step
        return tt, self.h.d(tt, 1)

    def count_open(self, a: float, b: float, ha: float, hb: float, depth: int) -> int:
        """Zeros of h in the open interval (a, b), with multiplicity."""
        width = b - a
        ta, da = self._inner_slope(a, width, True)
        tb, db = self._inner_slope(b, width, False)
        sa, sb = _sgn(ha), _sgn(hb)
        if da * db > 0:
            return 1 if sa * sb < 0 else 0
        if depth >= self.max_depth:
            raise UncertainCountError(f"no monotone split of [{a}, {b}]")
        if da * db < 0:
            tm = brentq(lambda t: self.h.d(t, 1), ta, tb, xtol=1e-15)
        else:
            tm = 0.5 * (a + b)
        hm = self.h.d(tm)
        count = 0
        if _sgn(hm) == 0:
            count += self.h.multiplicity(tm)
        return count + self.count_open(a, tm, ha, hm, depth + 1) + self.count_open(tm, b, hm, hb, depth + 1)


def intersection_count(spec: ReciprocalSpec, n: int, subgrid: int = SUBGRID) -> int:
    """Solutions of ``cos(nt) = f2(t)`` in [0, 2pi), counted with multiplicity.

    Each branch ``[(K-1)pi/n, K pi/n]`` is cut into ``subgrid`` pieces.  A
    piece on which h' keeps its sign holds a root iff h changes sign; other
    pieces are split at the extremum of h and rescanned.
    """
    if n <= spec.k:
        raise ValueError(f"n={n} must exceed k={spec.k}")
    h = _Gap(spec, n)
    m = 2 * n * subgrid
    t = np.linspace(0.0, 2 * math.pi, m + 1)
    hv = h.d(t)
    dv = h.d(t, 1)
    sg = np.where(np.abs(hv) <= ZERO_TOL, 0, np.sign(hv)).astype(int)
    total = 0
    for i in np.flatnonzero(sg[:-1] == 0):
        total += h.multiplicity(float(t[i]))
    d1tol = 1e-9 * h.scale(1)
    monotone = (dv[:-1] * dv[1:] > 0) & (np.abs(dv[:-1]) > d1tol) & (np.abs(dv[1:]) > d1tol)
    total += int(np.count_nonzero(monotone & (sg[:-1] * sg[1:] < 0)))
    scanner = _BranchScanner(h)
    uncertain = []
    for i in np.flatnonzero(~monotone):
        try:
            total += scanner.count_open(float(t[i]), float(t[i + 1]), float(hv[i]), float(hv[i + 1]), 0)
        except UncertainCountError:
            uncertain.append(int(i // subgrid) + 1)
    if uncertain:
        raise UncertainCountError(f"branches {sorted(set(uncertain))} not certified", sorted(set(uncertain)))
    return total


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    census_C: Fraction
    limit: float
    gap: float
    bound: float

    @property
    def ok(self) -> bool:
        return self.gap <= self.bound

    def to_dict(self) -> dict:
        return {"n": self.n, "C": float(self.census_C), "limit": self.limit,
                "gap": self.gap, "bound": self.bound, "ok": self.ok}


def convergence_table(spec: ReciprocalSpec, n_list: Iterable[int], tol: float = 1e-6) -> list[ConvergenceRow]:
    """Compare C(P_2n) with the limit; the gap must stay within (2r+2)/(2n)."""
    lim = limit_C(spec)
    rows = []
    for n in n_list:
        c = census(spec, n, tol).C
        gap = abs(float(c) - lim.limit)
        rows.append(ConvergenceRow(n, c, lim.limit, gap, (2 * lim.r + 2) / (2 * n)))
    return rows
