"""Two-variable analogue: the torus measure of ``|g2| >= 1`` and its sections.

For ``Q(x, y) = sum c * x^e1 * y^e2`` the function on the torus is

    g2(t1, t2) = -sum c * cos(e1*t1 + e2*t2),

and the section along ``y = x^m`` is the one-variable cosine series with
frequencies ``|e1 + m*e2|``, which feeds the univariate sampling routine.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .limit_numeric import SampleEstimate, approx_series
from .polycore import CosineSeries, SpecParseError

__all__ = [
    "LaurentSpec2",
    "LCResult",
    "BoydReport",
    "eval_g2",
    "lc_2d",
    "section_series",
    "lc_section",
    "boyd_convergence",
]


@dataclass(frozen=True)
class LaurentSpec2:
    monomials: tuple[tuple[int, int, Fraction], ...]

    def __post_init__(self) -> None:
        mons = tuple((int(e1), int(e2), Fraction(c)) for e1, e2, c in self.monomials)
        pairs = [(e1, e2) for e1, e2, _ in mons]
        if len(set(pairs)) != len(pairs):
            raise ValueError(f"repeated exponent pair in {pairs}")
        object.__setattr__(self, "monomials", mons)

    @classmethod
    def parse(cls, text: str) -> "LaurentSpec2":
        """Parse ``"e1,e2:coeff e1,e2:coeff ..."``, e.g. ``"1,0:1 0,1:1 0,0:1"``."""
        mons = []
        for item in text.split():
            m = re.fullmatch(r"([+-]?\d+),([+-]?\d+):([+-]?[\d/.]+)", item)
            if m is None:
                raise SpecParseError(f"bad monomial {item!r}; expected e1,e2:coeff")
            try:
                coeff = Fraction(m.group(3))
            except ValueError:
                raise SpecParseError(f"bad coefficient in {item!r}") from None
            mons.append((int(m.group(1)), int(m.group(2)), coeff))
        if not mons:
            raise SpecParseError("empty polynomial")
        try:
            return cls(tuple(mons))
        except ValueError as exc:
            raise SpecParseError(str(exc)) from None

    def swapped(self) -> "LaurentSpec2":
        return LaurentSpec2(tuple((e2, e1, c) for e1, e2, c in self.monomials))

    def __str__(self) -> str:
        return " ".join(f"{e1},{e2}:{c}" for e1, e2, c in self.monomials)


def eval_g2(q: LaurentSpec2, t1, t2):
    """``-sum c cos(e1 t1 + e2 t2)``; broadcasts over array arguments."""
    t1 = np.asarray(t1, dtype=float)
    t2 = np.asarray(t2, dtype=float)
    acc = np.zeros(np.broadcast(t1, t2).shape)
    for e1, e2, c in q.monomials:
        acc = acc - float(c) * np.cos(e1 * t1 + e2 * t2)
    return float(acc) if acc.ndim == 0 else acc


@dataclass(frozen=True)
class LCResult:
    value: float
    grid_p: int
    estimated_error: float
    hits: int = 0
    boundary_cells: int = 0

    def to_dict(self) -> dict:
        return {"value": self.value, "grid": self.grid_p, "estimated_error": self.estimated_error,
                "hits": self.hits, "boundary_cells": self.boundary_cells}


def _midpoints(p: int) -> np.ndarray:
    return (2 * np.arange(1, p + 1) - 1) * np.pi / p


def _indicator_rows(q: LaurentSpec2, t1: np.ndarray, t2: np.ndarray) -> np.ndarray:
    """Boolean block ``|g2(t1[i], t2[j])| > 1`` via angle-addition outer products."""
    g = np.zeros((t1.size, t2.size))
    for e1, e2, c in q.monomials:
        a1, a2 = e1 * t1, e2 * t2
        g -= float(c) * (np.outer(np.cos(a1), np.cos(a2)) - np.outer(np.sin(a1), np.sin(a2)))
    return np.abs(g) > 1.0


def lc_2d(q: LaurentSpec2, p: int, rows_per_block: int = 256) -> LCResult:
    """Midpoint-rule estimate of the normalized torus measure of ``|g2| > 1``.

    The error estimate is the normalized area of grid cells whose four
    corners disagree: every cell crossed by the level set is such a cell
    (up to features thinner than the grid).
    """
    if p < 2:
        raise ValueError("grid must have at least 2 points per axis")
    t = _midpoints(p)
    hits = 0
    boundary = 0
    first_row = None
    prev_last = None
    for lo in range(0, p, rows_per_block):
        block = _indicator_rows(q, t[lo:lo + rows_per_block], t)
        hits += int(np.count_nonzero(block))
        if first_row is None:
            first_row = block[0].copy()
        if prev_last is not None:
            block_ext = np.vstack([prev_last[None, :], block])
        else:
            block_ext = block
        boundary += _mixed_cells(block_ext)
        prev_last = block[-1].copy()
    # Wrap around the torus in the first axis.
    boundary += _mixed_cells(np.vstack([prev_last[None, :], first_row[None, :]]))
    value = hits / (p * p)
    return LCResult(value, p, boundary / (p * p), hits, boundary)


def _mixed_cells(block: np.ndarray) -> int:
    """Cells (2x2 corner sets, periodic in the second axis) not all equal."""
    a = block[:-1]
    b = block[1:]
    a2 = np.roll(a, -1, axis=1)
    b2 = np.roll(b, -1, axis=1)
    same = (a == b) & (a == a2) & (a == b2)
    return int(np.count_nonzero(~same))


def section_series(q: LaurentSpec2, m: int) -> CosineSeries:
    """g2 restricted to ``(t, m t)`` as a univariate cosine series."""
    return CosineSeries(Fraction(0), tuple((e1 + m * e2, -c) for e1, e2, c in q.monomials))


def lc_section(q: LaurentSpec2, m: int, p: int) -> SampleEstimate:
    """Grid estimate along the section ``y = x^m`` with p samples."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return approx_series(section_series(q, m), p)


@dataclass(frozen=True)
class BoydReport:
    reference: LCResult
    rows: tuple[tuple[int, float, float], ...]
    first_quartile_gap: float
    last_quartile_gap: float

    @property
    def passed(self) -> bool:
        return self.last_quartile_gap < self.first_quartile_gap

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict:
        return {
            "reference": self.reference.to_dict(),
            "rows": [{"m": m, "section": s, "gap": g} for m, s, g in self.rows],
            "first_quartile_gap": self.first_quartile_gap,
            "last_quartile_gap": self.last_quartile_gap,
            "verdict": self.verdict,
        }


def boyd_convergence(
    q: LaurentSpec2,
    m_list: Iterable[int],
    p: int = 1_000_000,
    grid: int = 2048,
    reference: LCResult | None = None,
) -> BoydReport:
    """Section values along ``y = x^m`` against the two-variable value.

    PASS when the mean gap over the last quarter of ``m_list`` is smaller
    than over the first quarter.
    """
    ms: Sequence[int] = list(m_list)
    if not ms:
        raise ValueError("m_list is empty")
    ref = reference if reference is not None else lc_2d(q, grid)
    rows = []
    for m in ms:
        v = lc_section(q, m, p).value
        rows.append((m, v, abs(v - ref.value)))
    qn = max(1, math.ceil(len(rows) / 4))
    first = sum(r[2] for r in rows[:qn]) / qn
    last = sum(r[2] for r in rows[-qn:]) / qn
    return BoydReport(ref, tuple(rows), first, last)
