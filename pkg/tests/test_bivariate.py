import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unimodular.bivariate import (
    LaurentSpec2,
    boyd_convergence,
    eval_g2,
    lc_2d,
    lc_section,
    section_series,
)
from unimodular.limit_numeric import approx_C
from unimodular.polycore import ReciprocalSpec, SpecParseError

Q = LaurentSpec2.parse
XY1 = Q("1,0:1 0,1:1 0,0:1")


def test_eval_examples():
    assert eval_g2(XY1, 0.0, 0.0) == -3.0
    assert eval_g2(XY1, math.pi, math.pi) == pytest.approx(1.0, abs=1e-15)
    t = np.linspace(-3, 3, 11)
    assert np.allclose(eval_g2(Q("1,1:1"), t, -t), -1.0)


def test_parse_errors():
    for bad in ["", "1:1", "1,0:x", "1,0:1 1,0:2"]:
        with pytest.raises(SpecParseError):
            Q(bad)


def test_lc2d_values():
    assert lc_2d(XY1, 2048).value == pytest.approx(0.5, abs=2e-3)
    assert lc_2d(Q("1,1:1 0,0:1"), 1024).value == pytest.approx(0.5, abs=2e-3)
    const = lc_2d(Q("0,0:3"), 64)
    assert const.value == 1.0 and const.estimated_error == 0.0


def test_lc2d_error_estimate_covers_truth():
    for p in (256, 512, 1024):
        res = lc_2d(XY1, p)
        assert abs(res.value - 0.5) <= res.estimated_error


def test_grid_refinement():
    coarse, fine = lc_2d(XY1, 512), lc_2d(XY1, 2048)
    assert abs(fine.value - 0.5) < abs(coarse.value - 0.5)
    assert fine.estimated_error < coarse.estimated_error


def test_swap_symmetry():
    q = Q("2,0:1 1,1:1 0,0:1")
    assert lc_2d(q, 512).value == pytest.approx(lc_2d(q.swapped(), 512).value, abs=2e-3)


def test_section_series():
    s = section_series(XY1, 5)
    assert s.constant == -1
    assert s.harmonics == ((1, -1), (5, -1))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 60), st.sampled_from([1000, 4096, 9973]))
def test_section_bit_identical_to_univariate(m, p):
    # m = 1 merges both harmonics into 2 cos t
    spec = ReciprocalSpec(2, ((1, 2),)) if m == 1 else ReciprocalSpec(2, ((1, 1), (m, 1)))
    assert lc_section(XY1, m, p) == approx_C(spec, p)


@pytest.mark.parametrize("m", [3, 5, 7, 21, 51])
def test_odd_sections_are_half(m):
    assert lc_section(XY1, m, 10**6).value == pytest.approx(0.5, abs=2e-5)


def test_boyd_reports():
    ref = lc_2d(XY1, 1024)
    rep = boyd_convergence(XY1, range(2, 41, 2), p=10**5, reference=ref)
    assert rep.passed and rep.verdict == "PASS"
    assert len(rep.rows) == 20
    assert rep.to_dict()["verdict"] == "PASS"
    with pytest.raises(ValueError):
        boyd_convergence(XY1, [])
