"""Reciprocal polynomial families, their cosine series and Chebyshev conversion.

A family is fixed by its central coefficients ``a0`` and ``(j, a_j)`` pairs.
Member ``n`` is

    P_2n(x) = x^2n + a0 x^n + 1 + sum_j a_j (x^(n+j) + x^(n-j)),

and on the unit circle ``x = e^{it}`` the root condition becomes
``cos(nt) = f2(t)`` with ``f2(t) = -a0/2 - sum_j a_j cos(jt)``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

__all__ = [
    "ReciprocalSpec",
    "CosineSeries",
    "AlgebraicPoly",
    "SpecParseError",
    "build_f2",
    "eval_f2",
    "to_chebyshev_algebraic",
    "chebyshev_t",
    "expand_P2n",
    "eval_kernel_odd",
    "eval_kernel_even",
    "KERNEL_GUARD",
]

KERNEL_GUARD = 1e-9


class SpecParseError(ValueError):
    """Raised when a spec or polynomial text cannot be parsed."""


@dataclass(frozen=True)
class ReciprocalSpec:
    """Central coefficients of a monic reciprocal family.

    Attributes:
        a0: coefficient of x^n.
        terms: ``(offset, coeff)`` pairs, offsets strictly increasing and >= 1,
            coefficients nonzero.
    """

    a0: int
    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        terms = tuple((int(j), int(a)) for j, a in self.terms)
        object.__setattr__(self, "terms", terms)
        if int(self.a0) != self.a0:
            raise ValueError(f"a0 must be an integer, got {self.a0!r}")
        object.__setattr__(self, "a0", int(self.a0))
        prev = 0
        for j, a in terms:
            if j <= prev:
                raise ValueError(f"offsets must be strictly increasing and >= 1: {terms}")
            if a == 0:
                raise ValueError(f"coefficient at offset {j} is zero")
            prev = j

    @classmethod
    def from_lists(cls, a0: int, offsets: Sequence[int], coeffs: Sequence[int]) -> "ReciprocalSpec":
        if len(offsets) != len(coeffs):
            raise ValueError("offsets and coeffs differ in length")
        return cls(a0, tuple(sorted(zip(offsets, coeffs))))

    @classmethod
    def parse(cls, text: str) -> "ReciprocalSpec":
        """Parse ``"a0; j1:a1, j2:a2"`` (``"3"`` or ``"3;"`` for a trinomial)."""
        head, sep, tail = text.strip().partition(";")
        try:
            a0 = int(head.strip())
        except ValueError:
            raise SpecParseError(f"bad central coefficient in {text!r}") from None
        terms = []
        for item in filter(None, (s.strip() for s in re.split(r"[,\s]+", tail))):
            m = re.fullmatch(r"([+-]?\d+)\s*:\s*([+-]?\d+)", item)
            if m is None:
                raise SpecParseError(f"bad term {item!r} in {text!r}")
            terms.append((int(m.group(1)), int(m.group(2))))
        try:
            prev = 0
            for j, _ in terms:
                if j <= prev:
                    raise SpecParseError(f"offsets must be strictly increasing and >= 1 in {text!r}")
                prev = j
            return cls(a0, tuple(terms))
        except SpecParseError:
            raise
        except ValueError as exc:
            raise SpecParseError(str(exc)) from None

    @property
    def k(self) -> int:
        return self.terms[-1][0] if self.terms else 0

    @property
    def offsets(self) -> tuple[int, ...]:
        return tuple(j for j, _ in self.terms)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(a for _, a in self.terms)

    @property
    def arity(self) -> int:
        """Number of monomials in a family member."""
        return 2 + 2 * len(self.terms) + (1 if self.a0 else 0)

    def negated(self) -> "ReciprocalSpec":
        return ReciprocalSpec(-self.a0, tuple((j, -a) for j, a in self.terms))

    def alternated(self) -> "ReciprocalSpec":
        """Replace a_j by (-1)^j a_j, keeping a0."""
        return ReciprocalSpec(self.a0, tuple((j, a if j % 2 == 0 else -a) for j, a in self.terms))

    def __str__(self) -> str:
        body = ",".join(f"{j}:{a}" for j, a in self.terms)
        return f"{self.a0}; {body}" if body else f"{self.a0};"

    def to_dict(self) -> dict:
        return {"a0": self.a0, "terms": [list(t) for t in self.terms], "text": str(self)}


@dataclass(frozen=True)
class CosineSeries:
    """``constant + sum amplitude * cos(frequency * t)``.

    Harmonics are kept sorted by frequency with like frequencies merged and
    zero amplitudes dropped, so equal functions compare equal.
    """

    constant: Fraction
    harmonics: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self) -> None:
        merged: dict[int, Fraction] = {}
        constant = Fraction(self.constant)
        for freq, amp in self.harmonics:
            freq = abs(int(freq))
            amp = Fraction(amp)
            if freq == 0:
                constant += amp
            else:
                merged[freq] = merged.get(freq, Fraction(0)) + amp
        object.__setattr__(self, "constant", constant)
        object.__setattr__(
            self, "harmonics", tuple((f, a) for f, a in sorted(merged.items()) if a != 0)
        )

    @property
    def is_constant(self) -> bool:
        return not self.harmonics

    @property
    def degree(self) -> int:
        return self.harmonics[-1][0] if self.harmonics else 0

    def __call__(self, t):
        return eval_f2(self, t)

    def derivative_bound(self) -> float:
        return float(sum(f * abs(a) for f, a in self.harmonics))


@dataclass(frozen=True)
class AlgebraicPoly:
    """Polynomial in ``x = cos t`` with rational coefficients, ascending degree."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        c = [Fraction(v) for v in self.coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c) if c else (Fraction(0),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        """Horner evaluation in floating point (scalars or arrays)."""
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def integer_coeffs(self) -> list[int]:
        """Same roots, integer coefficients: scaled by the common denominator."""
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return [int(c * den) for c in self.coeffs]


def build_f2(spec: ReciprocalSpec) -> CosineSeries:
    """Right-hand side of ``cos(nt) = f2(t)`` for the family ``spec``."""
    return CosineSeries(
        Fraction(-spec.a0, 2), tuple((j, Fraction(-a)) for j, a in spec.terms)
    )


def eval_f2(series: CosineSeries, t):
    """Evaluate the series at ``t`` (float or ndarray).

    Summation order is fixed (constant, then ascending frequency) so that
    every caller sampling the same series gets bit-identical values.
    """
    if isinstance(t, np.ndarray):
        acc = np.full(t.shape, float(series.constant))
        for freq, amp in series.harmonics:
            acc += float(amp) * np.cos(freq * t)
        return acc
    acc = float(series.constant)
    for freq, amp in series.harmonics:
        acc += float(amp) * math.cos(freq * t)
    return acc


@lru_cache(maxsize=None)
def chebyshev_t(j: int) -> tuple[int, ...]:
    """Monomial coefficients (ascending) of T_j, with T_j(cos t) = cos(jt)."""
    if j == 0:
        return (1,)
    if j == 1:
        return (0, 1)
    prev, cur = chebyshev_t(j - 2), chebyshev_t(j - 1)
    out = [0] * (j + 1)
    for i, c in enumerate(cur):
        out[i + 1] += 2 * c
    for i, c in enumerate(prev):
        out[i] -= c
    return tuple(out)


def to_chebyshev_algebraic(series: CosineSeries, shift=0) -> AlgebraicPoly:
    """Rewrite ``series(t) - shift`` as a polynomial in ``x = cos t``."""
    coeffs = [Fraction(0)] * (series.degree + 1)
    coeffs[0] = series.constant - Fraction(shift)
    for freq, amp in series.harmonics:
        for i, c in enumerate(chebyshev_t(freq)):
            if c:
                coeffs[i] += amp * c
    return AlgebraicPoly(tuple(coeffs))


def expand_P2n(spec: ReciprocalSpec, n: int) -> list[int]:
    """Integer coefficient vector of P_2n, ascending powers, length 2n+1."""
    if n <= spec.k:
        raise ValueError(f"n={n} must exceed the largest offset k={spec.k}")
    c = [0] * (2 * n + 1)
    c[0] = c[2 * n] = 1
    c[n] = spec.a0
    for j, a in spec.terms:
        c[n + j] = a
        c[n - j] = a
    return c


def _reduce_near_multiple_of_pi(t):
    t = np.asarray(t, dtype=float)
    j = np.rint(t / math.pi)
    delta = t - j * math.pi
    parity = np.where(np.mod(j, 2) == 0, 1.0, -1.0)
    return delta, parity


def eval_kernel_odd(m: int, t):
    """``cos t + cos 3t + ... + cos (2m-1)t`` via ``sin(2mt) / (2 sin t)``.

    Evaluated in the reduced variable ``t = j*pi + delta``; where
    ``|sin delta| < KERNEL_GUARD`` the l'Hopital quotient is used instead.
    """
    scalar = np.ndim(t) == 0
    delta, parity = _reduce_near_multiple_of_pi(t)
    s = np.sin(delta)
    near = np.abs(s) < KERNEL_GUARD
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = np.sin(2 * m * delta) / (2 * s)
    limit = m * np.cos(2 * m * delta) / np.cos(delta)
    out = parity * np.where(near, limit, direct)
    return float(out) if scalar else out


def eval_kernel_even(m: int, t):
    """``1/2 + cos 2t + ... + cos 2mt`` via ``sin((2m+1)t) / (2 sin t)``."""
    scalar = np.ndim(t) == 0
    delta, _ = _reduce_near_multiple_of_pi(t)
    s = np.sin(delta)
    near = np.abs(s) < KERNEL_GUARD
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = np.sin((2 * m + 1) * delta) / (2 * s)
    limit = (2 * m + 1) * np.cos((2 * m + 1) * delta) / (2 * np.cos(delta))
    out = np.where(near, limit, direct)
    return float(out) if scalar else out


def odd_pattern(count: int) -> ReciprocalSpec:
    """All-ones family on offsets 1, 3, ..., 2*count-1 with a0 = 0."""
    return ReciprocalSpec(0, tuple((2 * i + 1, 1) for i in range(count)))


def even_pattern(count: int) -> ReciprocalSpec:
    """All-ones family on offsets 2, 4, ..., 2*count with a0 = 1."""
    return ReciprocalSpec(1, tuple((2 * i + 2, 1) for i in range(count)))

