import json
import math

import pytest
from hypothesis import given, settings

from conftest import specs
from unimodular.limit_exact import (
    breakpoints,
    limit_C,
    limit_C_closed_quadrinomial,
    limit_of_series,
)
from unimodular.polycore import ReciprocalSpec, build_f2, eval_f2

P = ReciprocalSpec.parse


def test_pentanomial():
    res = limit_C(P("1; 1:1"))
    assert res.limit == pytest.approx(1 / 3, abs=1e-12)
    ts = sorted(b.t for b in res.breakpoints)
    assert ts == pytest.approx([math.pi / 3, 5 * math.pi / 3], abs=1e-14)
    assert {b.level for b in res.breakpoints} == {-1}
    assert res.r == 1


def test_hexanomial_breakpoints():
    res = limit_C(P("0; 1:1,3:1"))
    assert res.limit == pytest.approx(0.308799876, abs=1e-9)
    xs = sorted(b.x for b in res.breakpoints)
    assert len(res.breakpoints) == 4
    assert xs[-1] == pytest.approx(0.8846461771, abs=1e-9)
    assert xs[0] == pytest.approx(-xs[-1], abs=1e-14)


@pytest.mark.parametrize("k", [1, 2, 5])
def test_quadrinomial_two(k):
    assert limit_C(ReciprocalSpec(0, ((k, 2),))).limit == pytest.approx(2 / 3, abs=1e-12)
    assert limit_C(ReciprocalSpec(0, ((k, -2),))).limit == pytest.approx(2 / 3, abs=1e-12)


def test_all_unimodular():
    assert limit_C(P("0; 1:1")).limit == 0.0


def test_decanomial():
    assert limit_C(P("0; 1:1,3:1,5:1,7:1")).limit == pytest.approx(0.19768155115418617, abs=1e-8)


def test_closed_quadrinomial():
    assert limit_C_closed_quadrinomial(2) == pytest.approx(2 / 3)
    assert limit_C_closed_quadrinomial(-2) == pytest.approx(2 / 3)
    assert limit_C_closed_quadrinomial(10**6) > 0.999
    with pytest.raises(ValueError):
        limit_C_closed_quadrinomial(1)


@pytest.mark.parametrize("a0, want", [(0, 0.0), (2, 0.0), (-2, 0.0), (3, 1.0), (-7, 1.0)])
def test_trinomials(a0, want):
    assert limit_C(ReciprocalSpec(a0)).limit == want


def test_to_dict_is_json():
    d = json.loads(json.dumps(limit_C(P("1; 2:1,4:1")).to_dict()))
    assert set(d) == {"limit", "measure", "breakpoints", "intervals"}
    assert d["limit"] == pytest.approx(0.2741871146, abs=1e-9)


def test_full_coverage_gives_two_pi():
    res = limit_C(P("0; 1:1"))
    assert res.admissible_measure == 2 * math.pi


@settings(max_examples=200, deadline=None)
@given(specs())
def test_sign_and_alternating_flip(spec):
    base = limit_C(spec).limit
    assert limit_C(spec.negated()).limit == base
    assert limit_C(spec.alternated()).limit == pytest.approx(base, abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(specs())
def test_admissible_symmetry_and_midpoints(spec):
    res = limit_C(spec)
    s = build_f2(spec)
    for lo, hi in res.admissible:
        assert abs(eval_f2(s, 0.5 * (lo + hi))) < 1
    mirrored = sorted((round(2 * math.pi - hi, 9), round(2 * math.pi - lo, 9)) for lo, hi in res.admissible)
    assert mirrored == sorted((round(lo, 9), round(hi, 9)) for lo, hi in res.admissible)
    assert 0.0 <= res.limit <= 1.0


@settings(max_examples=200, deadline=None)
@given(specs())
def test_breakpoints_hit_levels(spec):
    s = build_f2(spec)
    for b in breakpoints(s):
        assert abs(eval_f2(s, b.t) - b.level) < 1e-9
        assert b.multiplicity >= 1


def test_limit_of_series_constant():
    assert limit_of_series(build_f2(ReciprocalSpec(4))).limit == 1.0
