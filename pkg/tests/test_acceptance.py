"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Criteria 1-8 call the checks in ``unimodular.repro`` (the same code behind
``unimodular repro``).  Criterion 9 runs the property suites under
hypothesis with 200 examples each.
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import specs
from unimodular import repro
from unimodular.limit_exact import limit_C
from unimodular.limit_numeric import approx_C, error_bound
from unimodular.polycore import eval_kernel_even, eval_kernel_odd, expand_P2n
from unimodular.root_oracle import census

LINES: list[str] = []


@pytest.fixture(scope="module", autouse=True)
def summary():
    yield
    print("\n==== acceptance summary ====")
    for line in LINES:
        print(line)


def _report(result: repro.CheckResult) -> None:
    line = result.line()
    LINES.append(line)
    print("\n" + line)
    assert result.passed, line


def test_c1_golden_limits():
    _report(repro.check_golden_limits())


def test_c2_quadrinomial_closed_form():
    _report(repro.check_quadrinomials())


def test_c3_oracle_agreement():
    _report(repro.check_oracles())


def test_c4_convergence_bound():
    _report(repro.check_convergence_bound())


def test_c5_search_winners():
    _report(repro.check_search())


def test_c6_dodecanomial():
    _report(repro.check_dodecanomial())


def test_c7_kernel_double_limit():
    _report(repro.check_double_limit())


def test_c8_bivariate():
    _report(repro.check_bivariate())


CASES = settings(max_examples=200, deadline=None, database=None)


@CASES
@given(specs(), st.integers(1, 40))
def _palindrome(spec, extra):
    v = expand_P2n(spec, spec.k + extra)
    assert v == v[::-1]


@CASES
@given(specs(kmax=4, amax=3), st.integers(1, 50))
def _inside_equals_outside(spec, extra):
    c = census(spec, spec.k + extra)
    assert c.I == c.E


@CASES
@given(specs())
def _flip_invariance(spec):
    base = limit_C(spec).limit
    assert limit_C(spec.negated()).limit == base
    assert abs(limit_C(spec.alternated()).limit - base) <= 1e-12


@CASES
@given(specs())
def _interval_symmetry(spec):
    res = limit_C(spec)
    mirrored = sorted((round(2 * math.pi - hi, 9), round(2 * math.pi - lo, 9)) for lo, hi in res.admissible)
    assert mirrored == sorted((round(lo, 9), round(hi, 9)) for lo, hi in res.admissible)


@CASES
@given(specs(), st.sampled_from([1000, 10**4, 10**5]))
def _approx_bound(spec, p):
    res = limit_C(spec)
    assert abs(approx_C(spec, p).value - res.limit) <= error_bound(len(res.breakpoints), p)


@CASES
@given(st.integers(1, 100), st.floats(1e-3, math.pi - 1e-3), st.integers(0, 1))
def _kernel_agreement(m, t, half):
    t += half * math.pi
    assert abs(eval_kernel_odd(m, t) - sum(math.cos((2 * j - 1) * t) for j in range(1, m + 1))) <= 1e-9
    even = 0.5 + sum(math.cos(2 * j * t) for j in range(1, m + 1))
    assert abs(eval_kernel_even(m, t) - even) <= 1e-9


PROPERTIES = {
    "palindrome expansion": _palindrome,
    "I=E": _inside_equals_outside,
    "sign/alternating flip": _flip_invariance,
    "admissible symmetry": _interval_symmetry,
    "approx->exact bound": _approx_bound,
    "kernel/naive agreement": _kernel_agreement,
}


def test_c9_property_suites():
    failures = []
    for name, prop in PROPERTIES.items():
        try:
            prop()
        except Exception as exc:  # hypothesis re-raises the minimal failing example
            failures.append(f"{name}: {type(exc).__name__}")
    detail = f"{len(PROPERTIES)} properties x 200 cases; failures {failures or 'none'}"
    _report(repro.CheckResult("9 property suites", not failures, detail))
