"""Reproduction suite: every reference value checked at its tolerance.

Each ``check_*`` function returns a :class:`CheckResult`; ``run_all`` runs
them in order.  Used by ``unimodular repro`` and by the acceptance tests.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .bivariate import LaurentSpec2, boyd_convergence, lc_2d, lc_section
from .limit_exact import limit_C, limit_C_closed_quadrinomial
from .limit_numeric import approx_C, approx_C_kernel
from .polycore import ReciprocalSpec, eval_kernel_even, eval_kernel_odd, expand_P2n
from .root_oracle import census, convergence_table, intersection_count
from .search import SearchSpace, conjecture_check, search_min

GOLDEN = {
    "pentanomial": ("1; 1:1", 1 / 3, 1e-10),
    "hexanomial": ("0; 1:1,3:1", 0.308799876, 1e-8),
    "heptanomial": ("1; 2:1,4:1", 0.2741871146, 1e-8),
    "octanomial": ("0; 1:1,3:1,5:1", 0.24378469902904315, 1e-8),
    "nonanomial": ("1; 2:1,4:1,6:1", 0.21854988117598984, 1e-8),
    "decanomial": ("0; 1:1,3:1,5:1,7:1", 0.19768155115418617, 1e-8),
}

# Largest breakpoint preimage x = cos t for four of the golden families.
GOLDEN_X = {
    "heptanomial": math.sqrt(3 / 8 + math.sqrt(13) / 8),
    "octanomial": 0.92757157104393247625,
    "decanomial": 0.95217558845251615756,
}

SEARCH_WINNERS = {
    5: ("1; 1:1", 1 / 3),
    6: ("0; 1:1,3:1", 0.308799876),
    7: ("1; 2:1,4:1", 0.2741871146),
    8: ("0; 1:1,3:1,5:1", 0.24378469902904315),
}

DODECANOMIAL_ONES = "0; 1:1,3:1,5:1,7:1,9:1"
DODECANOMIAL_CHALLENGER = "0; 1:2,3:2,5:2,7:1,9:1"
DOUBLE_LIMIT = 0.20885


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def check_golden_limits() -> CheckResult:
    worst = []
    ok = True
    for name, (text, want, tol) in GOLDEN.items():
        res = limit_C(ReciprocalSpec.parse(text))
        err = abs(res.limit - want)
        ok &= err <= tol
        if name in GOLDEN_X:
            xmax = max(b.x for b in res.breakpoints)
            ok &= abs(xmax - GOLDEN_X[name]) <= 1e-12
        worst.append(f"{name} {res.limit:.12f} (err {err:.1e})")
    return CheckResult("1 golden limits", ok, "; ".join(worst))


def check_quadrinomials() -> CheckResult:
    worst = 0.0
    for a in range(2, 11):
        for k in range(1, 7):
            got = limit_C(ReciprocalSpec(0, ((k, a),))).limit
            worst = max(worst, abs(got - limit_C_closed_quadrinomial(a)))
    degenerate = [limit_C(ReciprocalSpec(0, ((k, s),))).limit for k in range(1, 7) for s in (1, -1)]
    small = [limit_C(ReciprocalSpec(a0)).limit for a0 in range(-2, 3)]
    large = [limit_C(ReciprocalSpec(a0)).limit for a0 in (-5, -4, -3, 3, 4, 5)]
    ok = worst <= 1e-10 and all(v == 0.0 for v in degenerate + small) and all(v == 1.0 for v in large)
    return CheckResult("2 quadrinomial closed form", ok, f"max err {worst:.1e}; degenerate exact: {ok}")


def oracle_grid(count: int = 48, seed: int = 20240611) -> list[tuple[ReciprocalSpec, int]]:
    """Deterministic sample of (spec, n) with k <= 4, |a_j| <= 3."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        offs = sorted(rng.sample(range(1, 5), rng.randint(1, 4)))
        spec = ReciprocalSpec(rng.randint(-3, 3), tuple((j, rng.choice((-3, -2, -1, 1, 2, 3))) for j in offs))
        out.append((spec, (20, 50, 100)[len(out) % 3]))
    return out


def check_oracles() -> CheckResult:
    c = census(ReciprocalSpec.parse("0; 1:1,3:1"), 60)
    ok = (c.U, c.I, c.E) == (82, 19, 19) and c.C == Fraction(38, 120)
    mismatches = []
    grid = oracle_grid()
    for spec, n in grid:
        if census(spec, n).U != intersection_count(spec, n):
            mismatches.append(f"{spec}@{n}")
    ok = ok and not mismatches
    return CheckResult(
        "3 census vs intersection count", ok,
        f"hexanomial n=60 U={c.U} I={c.I} E={c.E}; {len(grid)} combos, mismatches {mismatches or 'none'}",
    )


def check_convergence_bound() -> CheckResult:
    bad = []
    for name, (text, _, _) in GOLDEN.items():
        for row in convergence_table(ReciprocalSpec.parse(text), (60, 200)):
            if not row.ok:
                bad.append(f"{name}@{row.n} gap {row.gap:.4f} > {row.bound:.4f}")
    return CheckResult("4 convergence bound (2r+2)/(2n)", not bad, "; ".join(bad) or "all 12 within bound")


def check_search(threads: int = 1) -> CheckResult:
    notes, ok = [], True
    for arity, (text, want) in SEARCH_WINNERS.items():
        res = search_min(SearchSpace(arity, 5, 3), threads=threads)
        tied = {str(r.spec) for r in res.tied_with_winner()}
        good = abs(res.winner.limit - want) <= 1e-8 and str(ReciprocalSpec.parse(text)) in tied
        ok &= good
        notes.append(f"a{arity} [{res.winner.spec}]")
    full = search_min(SearchSpace(6, 10, 10), threads=threads)
    good = full.total == 18000 and str(full.winner.spec) == "0; 1:1,3:1" and abs(full.winner.limit - 0.308799876) <= 1e-8
    ok &= good
    notes.append(f"full a6 ({full.total}) [{full.winner.spec}] {full.winner.limit:.9f}")
    return CheckResult("5 search winners", ok, "; ".join(notes))


def check_dodecanomial() -> CheckResult:
    rep = conjecture_check(4, [ReciprocalSpec.parse(DODECANOMIAL_CHALLENGER)])
    challenger = rep.challengers[0][1]
    ok = (abs(challenger - 0.215085) <= 1e-5 and abs(rep.odd_limit - 0.226163) <= 1e-5
          and challenger < rep.odd_limit)
    return CheckResult("6 dodecanomial counterexample", ok,
                       f"challenger {challenger:.6f} vs all-ones {rep.odd_limit:.6f}")


def check_double_limit(m: int = 100_000, p: int = 10_000_000) -> CheckResult:
    odd = approx_C_kernel("odd", m, p).value
    even = approx_C_kernel("even", m, p).value
    ok = abs(odd - DOUBLE_LIMIT) <= 5e-4 and abs(even - DOUBLE_LIMIT) <= 5e-4
    return CheckResult("7 kernel double limit", ok, f"odd {odd:.6f}, even {even:.6f}")


def check_bivariate() -> CheckResult:
    xy1 = LaurentSpec2.parse("1,0:1 0,1:1 0,0:1")
    ref = lc_2d(xy1, 2048)
    ok = abs(ref.value - 0.5) <= 2e-3
    worst = max(abs(lc_section(xy1, m, 10**6).value - 0.5) for m in range(3, 52, 2))
    ok &= worst <= 2e-5
    even = boyd_convergence(xy1, range(2, 101, 2), reference=ref)
    q2 = LaurentSpec2.parse("2,0:1 1,1:1 0,0:1")
    other = boyd_convergence(q2, range(10, 201))
    ok &= even.passed and other.passed
    return CheckResult(
        "8 bivariate", ok,
        f"lc2d {ref.value:.5f}; odd sections max dev {worst:.1e}; "
        f"boyd x+y+1 {even.verdict}, x^2+xy+1 {other.verdict}",
    )


def _random_spec(rng: random.Random, kmax: int = 6, amax: int = 5) -> ReciprocalSpec:
    offs = sorted(rng.sample(range(1, kmax + 1), rng.randint(1, min(4, kmax))))
    return ReciprocalSpec(rng.randint(-amax, amax),
                          tuple((j, rng.choice([v for v in range(-amax, amax + 1) if v])) for j in offs))


def check_properties(cases: int = 200, seed: int = 7) -> CheckResult:
    rng = random.Random(seed)
    failures = []
    for _ in range(cases):
        spec = _random_spec(rng)
        n = spec.k + rng.randint(1, 40)
        v = expand_P2n(spec, n)
        if v != v[::-1]:
            failures.append(f"palindrome {spec}")
        res = limit_C(spec)
        if limit_C(spec.negated()).limit != res.limit:
            failures.append(f"sign flip {spec}")
        if abs(limit_C(spec.alternated()).limit - res.limit) > 1e-12:
            failures.append(f"alternating flip {spec}")
        mirrored = sorted((round(2 * math.pi - hi, 9), round(2 * math.pi - lo, 9)) for lo, hi in res.admissible)
        if mirrored != sorted((round(lo, 9), round(hi, 9)) for lo, hi in res.admissible):
            failures.append(f"symmetry {spec}")
        p = 10**4
        if abs(approx_C(spec, p).value - res.limit) > (len(res.breakpoints) + 1) / p:
            failures.append(f"approx bound {spec}")
        m = rng.randint(1, 100)
        t = rng.uniform(1e-3, math.pi - 1e-3) + math.pi * rng.randint(0, 1)
        if abs(eval_kernel_odd(m, t) - sum(math.cos((2 * j - 1) * t) for j in range(1, m + 1))) > 1e-9:
            failures.append(f"odd kernel m={m}")
        if abs(eval_kernel_even(m, t) - 0.5 - sum(math.cos(2 * j * t) for j in range(1, m + 1))) > 1e-9:
            failures.append(f"even kernel m={m}")
    for _ in range(cases):
        spec = _random_spec(rng, 4, 3)
        n = rng.randint(spec.k + 1, 60)
        c = census(spec, n)
        if c.I != c.E or c.U + 2 * c.E != 2 * n:
            failures.append(f"I=E {spec}@{n}")
    return CheckResult("9 property suites", not failures,
                       f"{cases} cases each; failures {failures[:5] or 'none'}")


CHECKS: dict[str, Callable[[], CheckResult]] = {
    "1": check_golden_limits,
    "2": check_quadrinomials,
    "3": check_oracles,
    "4": check_convergence_bound,
    "5": check_search,
    "6": check_dodecanomial,
    "7": check_double_limit,
    "8": check_bivariate,
    "9": check_properties,
}


def run_all(only: list[str] | None = None, echo: Callable[[str], None] | None = print) -> list[CheckResult]:
    results = []
    for key, fn in CHECKS.items():
        if only and key not in only:
            continue
        res = fn()
        if echo:
            echo(res.line())
        results.append(res)
    return results
