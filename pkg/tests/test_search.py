import json

import pytest

from unimodular.polycore import ReciprocalSpec
from unimodular.search import (
    SearchSpace,
    coefficient_values,
    conjecture_check,
    enumerate_specs,
    search_min,
)

P = ReciprocalSpec.parse


def test_coefficient_order():
    assert coefficient_values(2) == [1, -1, 2, -2]


@pytest.mark.parametrize("arity, omax, cmax, want", [(5, 2, 1, 8), (6, 3, 1, 12), (6, 10, 10, 18000), (7, 5, 3, 2160)])
def test_counts(arity, omax, cmax, want):
    space = SearchSpace(arity, omax, cmax)
    specs = list(enumerate_specs(space))
    assert len(specs) == space.size() == want
    assert len(set(specs)) == want
    assert all(s.arity == arity for s in specs)


def test_small_hexanomial_shards():
    assert SearchSpace(6, 3, 1).shards() == [(1, 2), (1, 3), (2, 3)]


def test_parity_validation():
    with pytest.raises(ValueError):
        SearchSpace(6, has_center=True)
    with pytest.raises(ValueError):
        SearchSpace(2)


def test_pentanomial_full_space():
    res = search_min(SearchSpace(5, 10, 10))
    assert str(res.winner.spec) == "1; 1:1"
    assert res.winner.limit == pytest.approx(1 / 3, abs=1e-12)
    assert res.total == 4000


def test_hexanomial_reduced():
    res = search_min(SearchSpace(6, 5, 3))
    assert str(res.winner.spec) == "0; 1:1,3:1"
    assert res.winner.limit == pytest.approx(0.308799876, abs=1e-8)


def test_nonanomial_reduced_contains_pattern():
    res = search_min(SearchSpace(9, 6, 1))
    assert res.winner.limit == pytest.approx(0.21854988117598984, abs=1e-8)
    assert "1; 2:1,4:1,6:1" in {str(r.spec) for r in res.tied_with_winner()}


def test_ranks_and_threshold():
    res = search_min(SearchSpace(5, 3, 2), top=5)
    assert [r.rank for r in res.records] == [1, 2, 3, 4, 5]
    assert all(r.limit > 1e-9 for r in res.records)
    limits = [round(r.limit, 10) for r in res.records]
    assert limits == sorted(limits)


def test_threads_match_serial():
    a = search_min(SearchSpace(6, 4, 2))
    b = search_min(SearchSpace(6, 4, 2), threads=2)
    assert [(str(r.spec), r.limit) for r in a.records] == [(str(r.spec), r.limit) for r in b.records]


def test_resume_from_log(tmp_path):
    space = SearchSpace(6, 4, 2)
    log = tmp_path / "run.ndjson"
    full = search_min(space, log_path=log)
    lines = log.read_text().splitlines()
    assert json.loads(lines[-1])["total"] == full.total
    # keep the first two completed shards, as after an interruption
    cut = [i for i, ln in enumerate(lines) if "shard_done" in ln][1]
    partial = tmp_path / "partial.ndjson"
    partial.write_text("\n".join(lines[: cut + 1]) + "\n")
    resumed = search_min(space, log_path=partial)
    assert resumed.total == full.total
    assert [(str(r.spec), r.limit) for r in resumed.records] == [(str(r.spec), r.limit) for r in full.records]


def test_conjecture_dodecanomial():
    rep = conjecture_check(4, [P("0; 1:2,3:2,5:2,7:1,9:1")])
    assert rep.odd_spec == P("0; 1:1,3:1,5:1,7:1,9:1")
    assert rep.odd_limit == pytest.approx(0.226163, abs=1e-5)
    spec, lim, beats = rep.challengers[0]
    assert lim == pytest.approx(0.215085, abs=1e-5)
    assert beats


def test_conjecture_hexanomial_holds():
    res = search_min(SearchSpace(6, 5, 3), top=20)
    rep = conjecture_check(1, [r.spec for r in res.records[1:]])
    assert rep.odd_limit == pytest.approx(0.308799876, abs=1e-8)
    assert not any(beats for *_, beats in rep.challengers)
