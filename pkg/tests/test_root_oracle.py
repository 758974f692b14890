import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import specs
from unimodular.polycore import ReciprocalSpec, expand_P2n
from unimodular.root_oracle import (
    RootFindingError,
    all_roots,
    census,
    convergence_table,
    intersection_count,
)

P = ReciprocalSpec.parse
HEXA = P("0; 1:1,3:1")


def test_x2_plus_1():
    z = sorted(all_roots([1, 0, 1]).values, key=lambda v: v.imag)
    assert z[0] == pytest.approx(-1j, abs=1e-14)
    assert z[1] == pytest.approx(1j, abs=1e-14)


def test_cyclotomic():
    z = all_roots([1, 1, 1, 1, 1]).values
    want = [cmath.exp(2j * math.pi * k / 5) for k in range(1, 5)]
    for w in want:
        assert np.min(np.abs(z - w)) < 1e-12


def test_degree_120_residuals():
    r = all_roots(expand_P2n(HEXA, 60))
    assert r.values.size == 120
    assert r.residuals.max() < 1e-9


def test_non_convergence_is_reported():
    with pytest.raises(RootFindingError):
        all_roots(expand_P2n(HEXA, 60), max_iter=2)


def test_census_hexanomial():
    c = census(HEXA, 60)
    assert (c.U, c.I, c.E) == (82, 19, 19)
    assert c.C == Fraction(38, 120)
    assert c.to_dict()["C_rational"] == "38/120"


def test_census_all_unimodular():
    c = census(P("0; 1:1"), 4)
    assert c.U == 8 and c.C == 0


def test_census_trinomial():
    c = census(ReciprocalSpec(3), 5)
    assert (c.U, c.I, c.E) == (0, 5, 5)
    assert c.C == 1


def test_root_rows_classes():
    rows = census(HEXA, 20).root_rows()
    assert {cls for *_, cls in rows} <= {"unimodular", "inside", "outside"}
    assert len(rows) == 40


def test_intersection_hexanomial():
    assert intersection_count(HEXA, 60) == 82


@pytest.mark.parametrize("spec, n", [(P("1; 1:1"), 10), (P("0; 1:2"), 12), (P("0; 1:1"), 9), (P("2; 2:1"), 15)])
def test_intersection_matches_census(spec, n):
    assert intersection_count(spec, n) == census(spec, n).U


def test_intersection_rejects_small_n():
    with pytest.raises(ValueError):
        intersection_count(HEXA, 3)


def test_convergence_rows():
    rows = convergence_table(HEXA, [60])
    assert rows[0].gap == pytest.approx(abs(38 / 120 - 0.308799876), abs=1e-8)
    assert rows[0].bound == pytest.approx(6 / 120)
    assert rows[0].ok


def test_convergence_pentanomial_shrinks():
    # n divisible by 3 gives C = 1/3 exactly, so compare n = 31 and 301
    exact_small, exact_large = convergence_table(P("1; 1:1"), [30, 300])
    assert exact_small.gap < 1e-15 and exact_large.gap < 1e-15
    small, large = convergence_table(P("1; 1:1"), [31, 301])
    assert 8 < small.gap / large.gap < 12


def test_convergence_all_unimodular_exact():
    assert convergence_table(P("0; 1:1"), [17])[0].gap == 0


@settings(max_examples=200, deadline=None)
@given(specs(kmax=4, amax=3), st.integers(1, 50))
def test_inside_equals_outside(spec, extra):
    n = spec.k + extra
    c = census(spec, n)
    assert c.I == c.E
    assert c.U + c.I + c.E == 2 * n


@settings(max_examples=200, deadline=None)
@given(specs(kmax=4, amax=3), st.integers(1, 30))
def test_reciprocal_pairing(spec, extra):
    z = census(spec, spec.k + extra).roots
    inv = 1 / np.conj(z)
    # conj(1/z) is again a root for a real reciprocal polynomial
    for w in inv:
        assert np.min(np.abs(z - w)) < 1e-5 * max(1.0, abs(w))


@settings(max_examples=200, deadline=None)
@given(specs(kmax=4, amax=3), st.sampled_from([20, 50, 100]))
def test_census_matches_intersection_count(spec, n):
    assert intersection_count(spec, n) == census(spec, n).U


def test_bound_needs_large_n():
    # f2 = -3cos2t - 2cos4t has a minimum of exactly 1 at pi/2; when 4 | n,
    # cos(nt) touches it there, and small n overshoots the bound.
    spec = ReciprocalSpec(0, ((2, 3), (4, 2)))
    small, large = convergence_table(spec, [20, 200])
    assert not small.ok
    assert large.ok
