"""Certified real-root isolation for integer polynomials on [-1, 1].

Counting is exact: square-free decomposition with integer primitive
remainder sequences, then Descartes' rule of signs with dyadic bisection
(Vincent-Collins-Akritas).  Only the final refinement of each isolated
root runs in floating point, inside an interval already known to hold
exactly one simple root of a square-free factor.

Polynomials are lists of Python ints in ascending degree.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "RootIsolationError",
    "primitive",
    "derivative",
    "poly_gcd",
    "poly_divexact",
    "squarefree_decomposition",
    "isolate_unit_interval",
    "roots_in_closed_unit",
]


class RootIsolationError(ArithmeticError):
    """Raised when roots cannot be separated to the requested resolution."""


def _trim(p: list[int]) -> list[int]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _deg(p: list[int]) -> int:
    return len(p) - 1 if any(p) else -1


def primitive(p: list[int]) -> list[int]:
    """Divide out the content; make the leading coefficient positive."""
    p = _trim(p)
    g = 0
    for c in p:
        g = math.gcd(g, c)
    if g == 0:
        return [0]
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def derivative(p: list[int]) -> list[int]:
    return [i * c for i, c in enumerate(p)][1:] or [0]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b (integer arithmetic)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while _deg(r) >= db and any(r):
        dr = len(r) - 1
        lr = r[-1]
        shift = dr - db
        r = [c * lb for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        r = _trim(r[:-1]) if r[-1] == 0 else _trim(r)
        if not r:
            r = [0]
    return r


def poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd over Q of two integer polynomials."""
    a, b = primitive(a), primitive(b)
    if _deg(a) < _deg(b):
        a, b = b, a
    while _deg(b) > 0:
        r = _prem(a, b)
        a, b = b, primitive(r) if any(r) else [0]
    if _deg(b) == 0:
        return [1]
    return a


def _div_q(a: list, b: list[int]) -> list[Fraction]:
    """Exact quotient a/b over Q (a may hold Fractions)."""
    r = [Fraction(c) for c in a]
    db = len(b) - 1
    q = [Fraction(0)] * max(len(r) - db, 1)
    for shift in range(len(r) - 1 - db, -1, -1):
        c = r[shift + db] / b[-1]
        q[shift] = c
        if c:
            for i, bc in enumerate(b):
                r[shift + i] -= c * bc
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return q


def _as_int(p: list[Fraction]) -> list[int]:
    den = 1
    for c in p:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(c * den) for c in p]


def poly_divexact(a: list[int], b: list[int]) -> list[int]:
    """Quotient a/b over Q, returned primitive; b must divide a."""
    return primitive(_as_int(_div_q(a, b)))


def _sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def squarefree_decomposition(p: list[int]) -> list[tuple[list[int], int]]:
    """Yun's algorithm: ``p = const * prod f_i^i`` with each f_i square-free.

    Returns ``(f_i, i)`` for nonconstant factors, each primitive.
    """
    p = primitive(p)
    if _deg(p) <= 0:
        return []
    dp = derivative(p)
    g = poly_gcd(p, dp)
    if _deg(g) == 0:
        return [(p, 1)]
    c = _div_q(p, g)
    d = _sub(_div_q(dp, g), derivative(c))
    out = []
    i = 1
    while len(c) > 1:
        a = primitive(_as_int(c)) if not any(d) else poly_gcd(_as_int(c), _as_int(d))
        if _deg(a) > 0:
            out.append((a, i))
        c = _div_q(c, a)
        d = _sub(_div_q(d, a), derivative(c))
        i += 1
    return out


def _variations(p: list[int]) -> int:
    v = 0
    last = 0
    for c in p:
        if c:
            if last and (c > 0) != (last > 0):
                v += 1
            last = c
    return v


def _taylor_shift1(p: list[int]) -> list[int]:
    """Coefficients of p(x + 1)."""
    a = list(p)
    n = len(a)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            a[j] += a[j + 1]
    return a


def _descartes_bound(p: list[int]) -> int:
    """Upper bound (exact when 0 or 1) on the roots of p in (0, 1)."""
    return _variations(_taylor_shift1(p[::-1]))


def isolate_unit_interval(q: list[int], max_depth: int = 200) -> tuple[list[Fraction], list[tuple[Fraction, Fraction]]]:
    """Isolate the roots of a square-free q inside the open interval (0, 1).

    Returns ``(exact_roots, intervals)``: dyadic roots hit exactly during
    bisection, and open intervals each containing exactly one root.
    """
    exact: list[Fraction] = []
    intervals: list[tuple[Fraction, Fraction]] = []
    stack = [(list(q), 0, 0)]
    while stack:
        p, c, k = stack.pop()
        v = _descartes_bound(p)
        if v == 0:
            continue
        if v == 1:
            intervals.append((Fraction(c, 2**k), Fraction(c + 1, 2**k)))
            continue
        if k >= max_depth:
            raise RootIsolationError(f"roots closer than 2^-{max_depth} near {Fraction(c, 2**k)}")
        d = len(p) - 1
        left = [coef * (1 << (d - i)) for i, coef in enumerate(p)]
        right = _taylor_shift1(left)
        if right[0] == 0:
            exact.append(Fraction(2 * c + 1, 2 ** (k + 1)))
            right = right[1:]
        stack.append((right, 2 * c + 1, k + 1))
        stack.append((left, 2 * c, k + 1))
    exact.sort()
    intervals.sort()
    return exact, intervals


def _compose_affine(p: list[int]) -> list[int]:
    """Coefficients of p(2u - 1)."""
    out = [0] * len(p)
    # Horner in the composed variable.
    for c in reversed(p):
        nxt = [0] * len(p)
        for i, v in enumerate(out):
            if v:
                nxt[i] -= v
                if i + 1 < len(nxt):
                    nxt[i + 1] += 2 * v
        nxt[0] += c
        out = nxt
    return out


def _eval_exact(p: list[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _eval_float(p: list[int], x: float) -> float:
    acc = 0.0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _refine(p: list[int], lo: Fraction, hi: Fraction, tol: float) -> float:
    """Locate the single simple root of p in (lo, hi).

    Exact bisection runs until the double-precision signs at both ends agree
    with the exact ones (or the bracket is narrower than ``tol``); float
    bisection then continues down to adjacent doubles.
    """
    if _eval_exact(p, lo) == 0 or _eval_exact(p, hi) == 0:
        # An endpoint is itself a root (found exactly at a bisection point):
        # shrink symmetrically until the ends bracket the interior root.
        width = hi - lo
        j = 2
        while True:
            a, b = lo + width / 2**j, hi - width / 2**j
            fa, fb = _eval_exact(p, a), _eval_exact(p, b)
            if fa == 0:
                return float(a)
            if fb == 0:
                return float(b)
            if (fa > 0) != (fb > 0):
                lo, hi = a, b
                break
            j += 1
    slo = _eval_exact(p, lo) > 0
    # Exact bisection until the float signs at the ends are trustworthy.
    while True:
        flo, fhi = _eval_float(p, float(lo)), _eval_float(p, float(hi))
        if flo != 0 and fhi != 0 and (flo > 0) == slo and (fhi > 0) != slo:
            break
        if hi - lo < tol:
            return float((lo + hi) / 2)
        mid = (lo + hi) / 2
        fm = _eval_exact(p, mid)
        if fm == 0:
            return float(mid)
        if (fm > 0) == slo:
            lo = mid
        else:
            hi = mid
    a, b = float(lo), float(hi)
    fa = _eval_float(p, a)
    # Bisect down to adjacent doubles.
    while True:
        m = 0.5 * (a + b)
        if m <= a or m >= b:
            break
        fm = _eval_float(p, m)
        if fm == 0:
            return m
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


SEPARATION = 1e-13


def roots_in_closed_unit(p: list[int], tol: float = 1e-15) -> list[tuple[float, int, bool]]:
    """Real roots of p in [-1, 1] as ``(x, multiplicity, exact)`` sorted by x.

    ``exact`` marks rational roots found exactly (including x = +-1).
    Distinct roots closer than ``SEPARATION`` raise RootIsolationError.
    """
    out: list[tuple[float, int, bool]] = []
    for f, mult in squarefree_decomposition(p):
        f = list(f)
        for end in (-1, 1):
            # f is square-free, so an endpoint root divides out once.
            if _eval_exact(f, Fraction(end)) == 0:
                out.append((float(end), mult, True))
                f = poly_divexact(f, [-end, 1])
        if len(f) <= 1:
            continue
        g = _compose_affine(f)
        exact, intervals = isolate_unit_interval(g)
        for u in exact:
            out.append((float(2 * u - 1), mult, True))
        for lo, hi in intervals:
            x = _refine(f, 2 * lo - 1, 2 * hi - 1, tol)
            out.append((x, mult, False))
    out.sort()
    for (x1, _, _), (x2, _, _) in zip(out, out[1:]):
        if x2 - x1 < SEPARATION:
            raise RootIsolationError(f"roots at {x1!r} and {x2!r} not separated at {SEPARATION}")
    return out
