"""Exhaustive search of central coefficients for the smallest positive limit.

Work is sharded by offset tuple; each shard evaluates every coefficient
choice for its offsets.  Completed shards are appended to an optional
newline-delimited JSON run log so an interrupted search can resume.
"""

from __future__ import annotations

import itertools
import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Sequence

from .limit_exact import limit_C
from .polycore import ReciprocalSpec, even_pattern, odd_pattern
from .rootiso import RootIsolationError

__all__ = [
    "SearchSpace",
    "SearchRecord",
    "SearchResult",
    "coefficient_values",
    "enumerate_specs",
    "search_min",
    "conjecture_check",
    "ConjectureReport",
]

log = logging.getLogger(__name__)

# Limits are ranked after rounding so that members of one sign class, whose
# float values differ in the last bits, tie and fall back to spec order.
RANK_DIGITS = 10


def coefficient_values(coeff_max: int) -> list[int]:
    """Nonzero coefficients in enumeration order: 1, -1, 2, -2, ..."""
    return [s * v for v in range(1, coeff_max + 1) for s in (1, -1)]


@dataclass(frozen=True)
class SearchSpace:
    """All families with ``arity`` monomials and bounded offsets/coefficients.

    ``arity = 2 + 2 * (number of offsets) + (1 if has_center)``, so the
    parity of the arity fixes ``has_center``.
    """

    arity: int
    offset_max: int = 10
    coeff_max: int = 10
    has_center: bool | None = None

    def __post_init__(self) -> None:
        if self.arity < 3:
            raise ValueError("arity must be at least 3")
        center = self.arity % 2 == 1
        if self.has_center is None:
            object.__setattr__(self, "has_center", center)
        elif self.has_center != center:
            raise ValueError(f"arity {self.arity} {'needs' if center else 'excludes'} a central coefficient")
        if self.offset_max < 1 or self.coeff_max < 1:
            raise ValueError("offset_max and coeff_max must be positive")

    @property
    def n_offsets(self) -> int:
        return (self.arity - 2 - (1 if self.has_center else 0)) // 2

    def shards(self) -> list[tuple[int, ...]]:
        return list(itertools.combinations(range(1, self.offset_max + 1), self.n_offsets))

    def size(self) -> int:
        per = (2 * self.coeff_max) ** (self.n_offsets + (1 if self.has_center else 0))
        return math.comb(self.offset_max, self.n_offsets) * per

    def to_dict(self) -> dict:
        return {"arity": self.arity, "offset_max": self.offset_max,
                "coeff_max": self.coeff_max, "has_center": self.has_center}


def _shard_specs(space: SearchSpace, offsets: tuple[int, ...]) -> Iterator[ReciprocalSpec]:
    vals = coefficient_values(space.coeff_max)
    centers = vals if space.has_center else [0]
    for a0 in centers:
        for coeffs in itertools.product(vals, repeat=len(offsets)):
            yield ReciprocalSpec(a0, tuple(zip(offsets, coeffs)))


def enumerate_specs(space: SearchSpace) -> Iterator[ReciprocalSpec]:
    """Every spec in the space exactly once, shard by shard."""
    for offsets in space.shards():
        yield from _shard_specs(space, offsets)


def spec_order_key(spec: ReciprocalSpec) -> tuple:
    """Enumeration order: offsets, then a0, then coefficients (1 < -1 < 2 ...)."""
    rank = lambda v: (abs(v), v < 0)  # noqa: E731
    return (spec.offsets, rank(spec.a0), tuple(rank(a) for a in spec.coeffs))


@dataclass(frozen=True)
class SearchRecord:
    spec: ReciprocalSpec
    limit: float
    rank: int = 0

    def to_dict(self) -> dict:
        return {"rank": self.rank, "spec": str(self.spec), "a0": self.spec.a0,
                "terms": [list(t) for t in self.spec.terms], "limit": self.limit}

    @classmethod
    def from_dict(cls, d: dict) -> "SearchRecord":
        return cls(ReciprocalSpec.parse(d["spec"]), float(d["limit"]), int(d.get("rank") or 0))


@dataclass
class SearchResult:
    space: SearchSpace
    records: list[SearchRecord]
    total: int
    skipped: list[tuple[str, str]] = field(default_factory=list)

    @property
    def winner(self) -> SearchRecord | None:
        return self.records[0] if self.records else None

    def tied_with_winner(self, digits: int = RANK_DIGITS) -> list[SearchRecord]:
        if not self.records:
            return []
        best = round(self.records[0].limit, digits)
        return [r for r in self.records if round(r.limit, digits) == best]

    def summary(self) -> dict:
        return {
            "space": self.space.to_dict(),
            "total": self.total,
            "skipped": len(self.skipped),
            "winner": self.winner.to_dict() if self.winner else None,
        }


def _eval_shard(args: tuple[SearchSpace, tuple[int, ...], float]) -> tuple[tuple[int, ...], list, list, int]:
    space, offsets, zero_threshold = args
    kept, skipped, count = [], [], 0
    for spec in _shard_specs(space, offsets):
        count += 1
        try:
            lim = limit_C(spec).limit
        except (RootIsolationError, ArithmeticError) as exc:
            skipped.append((str(spec), str(exc)))
            continue
        if lim > zero_threshold:
            kept.append((str(spec), lim))
    return offsets, kept, skipped, count


def _read_log(path: Path) -> tuple[set[tuple[int, ...]], list, list, int]:
    done: set[tuple[int, ...]] = set()
    kept, skipped, total = [], [], 0
    if not path.exists():
        return done, kept, skipped, total
    pending: dict[tuple[int, ...], list] = {}
    with path.open() as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            row = json.loads(line)
            if "shard" in row and "limit" in row:
                pending.setdefault(tuple(row["shard"]), []).append((row["spec"], row["limit"]))
            elif "shard_done" in row:
                key = tuple(row["shard_done"])
                done.add(key)
                kept.extend(pending.pop(key, []))
                skipped.extend(tuple(s) for s in row.get("skipped", []))
                total += row["evaluated"]
    return done, kept, skipped, total


def search_min(
    space: SearchSpace,
    zero_threshold: float = 1e-9,
    threads: int = 1,
    log_path: str | Path | None = None,
    top: int | None = None,
) -> SearchResult:
    """Rank every spec in ``space`` with limit above ``zero_threshold``.

    Sorted ascending by limit (rounded to ``RANK_DIGITS``) with enumeration
    order breaking ties.  With ``log_path`` set, shards already recorded in
    that file are not recomputed.
    """
    path = Path(log_path) if log_path else None
    done, kept, skipped, total = _read_log(path) if path else (set(), [], [], 0)
    todo = [(space, s, zero_threshold) for s in space.shards() if s not in done]
    if done:
        log.info("resuming: %d shards done, %d to go", len(done), len(todo))
    fh = path.open("a") if path else None
    try:
        if threads > 1 and len(todo) > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                results = pool.map(_eval_shard, todo, chunksize=max(1, len(todo) // (4 * threads)))
                for res in results:
                    total += _absorb(res, kept, skipped, fh)
        else:
            for job in todo:
                total += _absorb(_eval_shard(job), kept, skipped, fh)
        parsed = [(ReciprocalSpec.parse(s), lim) for s, lim in kept]
        parsed.sort(key=lambda sl: (round(sl[1], RANK_DIGITS), spec_order_key(sl[0])))
        if top is not None:
            parsed = parsed[:top]
        records = [SearchRecord(s, lim, i + 1) for i, (s, lim) in enumerate(parsed)]
        result = SearchResult(space, records, total, skipped)
        if fh:
            fh.write(json.dumps(result.summary()) + "\n")
    finally:
        if fh:
            fh.close()
    for spec, why in skipped:
        log.warning("skipped %s: %s", spec, why)
    return result


def _absorb(res, kept: list, skipped: list, fh) -> int:
    offsets, shard_kept, shard_skipped, count = res
    kept.extend(shard_kept)
    skipped.extend(shard_skipped)
    if fh:
        for spec, lim in shard_kept:
            fh.write(json.dumps({"shard": list(offsets), "spec": spec, "limit": lim}) + "\n")
        fh.write(json.dumps({"shard_done": list(offsets), "evaluated": count,
                             "skipped": [list(s) for s in shard_skipped]}) + "\n")
        fh.flush()
    return count


@dataclass(frozen=True)
class ConjectureReport:
    k: int
    odd_spec: ReciprocalSpec
    odd_limit: float
    even_spec: ReciprocalSpec
    even_limit: float
    challengers: tuple[tuple[ReciprocalSpec, float, bool], ...] = ()

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "odd": {"spec": str(self.odd_spec), "limit": self.odd_limit},
            "even": {"spec": str(self.even_spec), "limit": self.even_limit},
            "challengers": [
                {"spec": str(s), "limit": lim, "beats_pattern": beats} for s, lim, beats in self.challengers
            ],
        }


def conjecture_check(k: int, challengers: Sequence[ReciprocalSpec] = ()) -> ConjectureReport:
    """Compare the all-ones patterns with challengers of the same arity.

    For a given k the odd pattern has offsets 1, 3, ..., 2k+1 (a0 = 0,
    2k+4 monomials) and the even pattern offsets 2, 4, ..., 2k (a0 = 1,
    2k+3 monomials).  A challenger "beats" the pattern with its arity when
    its limit is positive and strictly smaller.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    odd, even = odd_pattern(k + 1), even_pattern(k)
    odd_lim, even_lim = limit_C(odd).limit, limit_C(even).limit
    by_arity = {odd.arity: odd_lim, even.arity: even_lim}
    rows = []
    for spec in challengers:
        lim = limit_C(spec).limit
        ref = by_arity.get(spec.arity)
        rows.append((spec, lim, ref is not None and 0 < lim < ref))
    return ConjectureReport(k, odd, odd_lim, even, even_lim, tuple(rows))
