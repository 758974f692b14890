"""Command-line entry point.

Exit codes: 0 success, 2 parse error, 3 numeric failure, 4 repro mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import sys
from pathlib import Path

import numpy as np

from .bivariate import LaurentSpec2, boyd_convergence, lc_2d
from .limit_exact import limit_C
from .limit_numeric import approx_C, approx_C_kernel
from .polycore import ReciprocalSpec, SpecParseError, build_f2, eval_f2, expand_P2n
from .root_oracle import (
    RootFindingError,
    UncertainCountError,
    census,
    convergence_table,
    intersection_count,
)
from .rootiso import RootIsolationError
from .search import SearchSpace, conjecture_check, search_min

EXIT_PARSE, EXIT_NUMERIC, EXIT_MISMATCH = 2, 3, 4


def _emit(args, payload: dict, text: str | None = None) -> None:
    if args.format == "json" or text is None:
        print(json.dumps(payload, indent=None if args.compact else 2))
    else:
        print(text)


def _spec(text: str) -> ReciprocalSpec:
    return ReciprocalSpec.parse(text)


def cmd_limit(args) -> int:
    res = limit_C(_spec(args.spec))
    _emit(args, res.to_dict(), repr(res.limit))
    return 0


def cmd_approx(args) -> int:
    if args.kernel:
        est = approx_C_kernel(args.kernel, args.m, args.p)
    else:
        if args.spec is None:
            raise SpecParseError("approx needs a spec or --kernel")
        est = approx_C(_spec(args.spec), args.p)
    _emit(args, est.to_dict(), f"{est} = {est.value!r}")
    return 0


def cmd_census(args) -> int:
    spec = _spec(args.spec)
    c = census(spec, args.n, args.tol)
    payload = c.to_dict()
    if args.intersections:
        payload["intersection_count"] = intersection_count(spec, args.n)
    if args.dump_roots:
        _write_roots(Path(args.dump_roots), c)
    text = f"n={c.n} U={c.U} I={c.I} E={c.E} C={c.I + c.E}/{2 * c.n}={float(c.C)!r}" + (" WARN" if c.warn else "")
    _emit(args, payload, text)
    return 0


def _write_roots(path: Path, c) -> None:
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["re", "im", "modulus", "class"])
        for re_, im, mod, cls in c.root_rows():
            w.writerow([repr(float(re_)), repr(float(im)), repr(float(mod)), cls])


def cmd_convergence(args) -> int:
    rows = convergence_table(_spec(args.spec), args.n)
    payload = {"rows": [r.to_dict() for r in rows]}
    if args.format == "csv":
        lines = ["n,C,limit,gap,bound"] + [f"{r.n},{float(r.census_C)!r},{r.limit!r},{r.gap!r},{r.bound!r}" for r in rows]
        print("\n".join(lines))
    else:
        _emit(args, payload, "\n".join(f"n={r.n} C={float(r.census_C):.6f} gap={r.gap:.6f} bound={r.bound:.6f}" for r in rows))
    return 0 if all(r.ok for r in rows) else EXIT_NUMERIC


def cmd_search(args) -> int:
    space = SearchSpace(args.arity, args.offset_max, args.coeff_max, args.center)
    res = search_min(space, args.zero_threshold, threads=args.threads, log_path=args.resume, top=args.top)
    payload = res.summary()
    payload["records"] = [r.to_dict() for r in res.records[: args.top or 10]]
    text = "\n".join(f"{r.rank:>4} {r.limit!r:<22} {r.spec}" for r in res.records[: args.top or 10])
    _emit(args, payload, text)
    return 0


def cmd_conjecture(args) -> int:
    rep = conjecture_check(args.k, [_spec(s) for s in args.challenger])
    _emit(args, rep.to_dict())
    return 0


def cmd_lc2(args) -> int:
    res = lc_2d(LaurentSpec2.parse(args.poly), args.grid)
    _emit(args, res.to_dict(), f"{res.value!r} +- {res.estimated_error!r}")
    return 0


def cmd_boyd(args) -> int:
    q = LaurentSpec2.parse(args.poly)
    rep = boyd_convergence(q, range(args.m_from, args.m_to + 1, args.step), p=args.p, grid=args.grid)
    if args.format == "json":
        _emit(args, rep.to_dict())
    else:
        print("m,section,gap")
        for m, v, g in rep.rows:
            print(f"{m},{v!r},{g!r}")
        print(f"# reference {rep.reference.value!r} verdict {rep.verdict}", file=sys.stderr)
    return 0


def cmd_expand(args) -> int:
    v = expand_P2n(_spec(args.spec), args.n)
    _emit(args, {"n": args.n, "coeffs": v}, ",".join(map(str, v)))
    return 0


def cmd_figdata(args) -> int:
    spec = _spec(args.spec)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    t = np.linspace(0.0, 2 * math.pi, args.samples + 1)
    f1 = np.cos(args.n * t)
    f2 = eval_f2(build_f2(spec), t)
    curves = out / "curves.csv"
    with curves.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t", "f1", "f2"])
        for row in zip(t, f1, f2):
            w.writerow([repr(float(v)) for v in row])
    roots = out / "roots.csv"
    _write_roots(roots, census(spec, args.n))
    _emit(args, {"curves": str(curves), "roots": str(roots)}, f"{curves}\n{roots}")
    return 0


def cmd_repro(args) -> int:
    from .repro import run_all

    only = args.only.split(",") if args.only else None
    results = run_all(only)
    return 0 if all(r.passed for r in results) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unimodular",
        description="Limits of the nonunimodular root fraction of reciprocal polynomial families.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "csv"), default="text")
    common.add_argument("--compact", action="store_true", help="single-line JSON")
    common.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("limit", parents=[common], help="exact limit of C(P_2n)")
    p.add_argument("spec", help='central coefficients, e.g. "0; 1:1,3:1"')
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("approx", parents=[common], help="grid-sampling estimate")
    p.add_argument("spec", nargs="?")
    p.add_argument("--p", type=int, default=1_000_000)
    p.add_argument("--kernel", choices=("odd", "even"))
    p.add_argument("--m", type=int, default=1)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("census", parents=[common], help="root census of P_2n")
    p.add_argument("spec")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--intersections", action="store_true", help="also run the branch-scan count")
    p.add_argument("--dump-roots", metavar="PATH")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("convergence", parents=[common], help="census C versus the limit")
    p.add_argument("spec")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.set_defaults(func=cmd_convergence)

    p = sub.add_parser("search", parents=[common], help="exhaustive coefficient search")
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--offset-max", type=int, default=10)
    p.add_argument("--coeff-max", type=int, default=10)
    p.add_argument("--center", dest="center", action="store_true", default=None)
    p.add_argument("--no-center", dest="center", action="store_false")
    p.add_argument("--top", type=int, default=None)
    p.add_argument("--resume", metavar="PATH", help="NDJSON run log (appended, resumed)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--zero-threshold", type=float, default=1e-9)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("conjecture", parents=[common], help="all-ones patterns versus challengers")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("challenger", nargs="*")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("lc2", parents=[common], help="two-variable torus measure")
    p.add_argument("--poly", required=True, help='monomials "e1,e2:coeff ..."')
    p.add_argument("--grid", type=int, default=2048)
    p.set_defaults(func=cmd_lc2)

    p = sub.add_parser("boyd", parents=[common], help="sections y = x^m versus the torus value")
    p.add_argument("--poly", required=True)
    p.add_argument("--m-from", type=int, required=True)
    p.add_argument("--m-to", type=int, required=True)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--p", type=int, default=1_000_000)
    p.add_argument("--grid", type=int, default=2048)
    p.set_defaults(func=cmd_boyd)

    p = sub.add_parser("expand", parents=[common], help="coefficients of P_2n")
    p.add_argument("spec")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("figdata", parents=[common], help="curve samples and root scatter CSVs")
    p.add_argument("spec")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=4000)
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_figdata)

    p = sub.add_parser("repro", parents=[common], help="run the reference-value checks")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (SpecParseError, ValueError) as exc:
        return _fail(args, "parse_error", exc, EXIT_PARSE)
    except (RootIsolationError, RootFindingError, UncertainCountError, ArithmeticError) as exc:
        return _fail(args, "numeric_failure", exc, EXIT_NUMERIC)


def _fail(args, kind: str, exc: Exception, code: int) -> int:
    if getattr(args, "format", "text") == "json":
        print(json.dumps({"error": kind, "message": str(exc), "exit_code": code}))
    else:
        print(f"error: {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
