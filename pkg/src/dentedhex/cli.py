"""Command-line front end.

Exit codes: 0 success, 1 input or validation error, 2 a verification check
failed. Machine output is exact: decimal integers, "p/q" rationals and the
canonical polynomial text form; --float only ever adds columns.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from .engines import (RegionTooLarge, count_axis, count_brute,
                      enumerate_tilings, qcount_axis, qcount_brute)
from .formulas import ShuffleInstance, gen_shuffle_rhs, q_shuffle_rhs, shuffle_rhs
from .harness import engine_corpus, run_suite, summarize
from .lattice import ClusterSpec, SpecError, build_region, spec_from_json_dict
from .render import render_region_svg, render_tiling_svg
from .theorems import TermBudgetExceeded, asym_table


def _load_spec(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return spec_from_json_dict(json.load(fh))


def _load_clusters(path: str) -> ClusterSpec:
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    return ClusterSpec(tuple(tuple(c) for c in obj["clusters"]),
                       tuple(obj["gaps"]))


def _write(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_count(args) -> int:
    spec = _load_spec(args.spec)
    if args.engine == "brute":
        value = count_brute(build_region(spec), limit=args.limit)
    else:
        value = count_axis(spec)
    print(value)
    return 0


def _cmd_qcount(args) -> int:
    spec = _load_spec(args.spec)
    if args.engine == "brute":
        poly = qcount_brute(build_region(spec), limit=args.limit)
    else:
        poly = qcount_axis(spec)
    print(poly.eval_one() if args.at_one else poly.render())
    return 0


def _instance_from_specs(a, b) -> ShuffleInstance:
    if (a.x, a.y, a.B) != (b.x, b.y, b.B):
        raise SpecError("the two specs must share x, y and the barrier set")
    return ShuffleInstance(a.x, a.y, a.U, a.D, b.U, b.D, a.B)


def _cmd_ratio(args) -> int:
    inst = _instance_from_specs(_load_spec(args.spec_a), _load_spec(args.spec_b))
    if args.thm == 1:
        value = shuffle_rhs(inst)
        print(value)
        if args.check:
            ok = (count_axis(inst.spec_a()) * value.denominator
                  == count_axis(inst.spec_b()) * value.numerator)
            return 0 if ok else 2
    elif args.thm == 2:
        value = gen_shuffle_rhs(inst)
        print(value)
        if args.check:
            ok = (count_axis(inst.spec_a()) * value.denominator
                  == count_axis(inst.spec_b()) * value.numerator)
            return 0 if ok else 2
    else:
        ratio = q_shuffle_rhs(inst)
        print(ratio.render())
        if args.check:
            from .exactnum import QRatio
            ok = QRatio(qcount_axis(inst.spec_a()),
                        qcount_axis(inst.spec_b())) == ratio
            return 0 if ok else 2
    return 0


def _cmd_verify(args) -> int:
    reports = run_suite(args.suite, seed=args.seed, max_L=args.max_L,
                        count=args.count, jobs=args.jobs)
    for r in reports:
        print(r.json_line())
    s = summarize(reports)
    print(f"SUITE {args.suite}: {s.total - s.failed}/{s.total} passed")
    if s.failed:
        print(f"FIRST-FAILURE {s.first_failure}")
    return 2 if s.failed else 0


def _cmd_asym(args) -> int:
    c = _load_clusters(args.clusters)
    c2 = _load_clusters(args.clusters_alt)
    table = asym_table(c, c2, args.x, args.y, args.nmax,
                       term_budget=args.term_budget)

    def emit(fh):
        buf = csv.writer(fh)
        header = ["N", "ratio", "limit", "deviation"]
        if args.float:
            header += ["ratio_float", "deviation_float"]
        buf.writerow(header)
        for row in table.rows:
            line = [row.N, str(row.ratio), str(table.limit),
                    str(row.deviation)]
            if args.float:
                line += [float(row.ratio), float(row.deviation)]
            buf.writerow(line)

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            emit(fh)
    else:
        emit(sys.stdout)
    return 0


def _cmd_render(args) -> int:
    spec = _load_spec(args.spec)
    if args.tiling is None:
        _write(render_region_svg(spec, unit=args.unit), args.out)
        return 0
    region = build_region(spec)
    tilings = enumerate_tilings(region, limit=args.tiling + 1)
    if args.tiling >= len(tilings):
        print(f"error: region has only {len(tilings)} tilings", file=sys.stderr)
        return 1
    _write(render_tiling_svg(spec, tilings[args.tiling], unit=args.unit),
           args.out)
    return 0


def _cmd_corpus(args) -> int:
    for spec in engine_corpus(seed=args.seed, size=args.size,
                              max_L=args.max_L):
        print(json.dumps(spec.to_json_dict(), sort_keys=True,
                         separators=(",", ":")))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dentedhex",
        description="Exact lozenge-tiling counts of dented hexagons "
                    "with axis barriers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec(p):
        p.add_argument("--spec", required=True, help="region spec JSON file")

    p = sub.add_parser("count", help="exact tiling count of a region")
    add_spec(p)
    p.add_argument("--engine", choices=("axis", "brute"), default="axis")
    p.add_argument("--limit", type=int, default=None,
                   help="brute-force triangle budget")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("qcount", help="tiling generating function in q")
    add_spec(p)
    p.add_argument("--engine", choices=("axis", "brute"), default="axis")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--at-one", action="store_true",
                   help="evaluate at q=1 (equals count)")
    p.set_defaults(func=_cmd_qcount)

    p = sub.add_parser("ratio", help="predicted count ratio of two regions")
    p.add_argument("--thm", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--spec-a", required=True)
    p.add_argument("--spec-b", required=True)
    p.add_argument("--check", action="store_true",
                   help="also verify against the engines (exit 2 on mismatch)")
    p.set_defaults(func=_cmd_ratio)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all",
                   choices=("thm1", "thm2", "thm3", "kuo", "schur",
                            "barrier", "asym", "all"))
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--max-L", type=int, default=None, dest="max_L")
    p.add_argument("--count", type=int, default=None,
                   help="override the per-suite instance count")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("asym", help="finite-scale ratio table (CSV)")
    p.add_argument("--clusters", required=True,
                   help='JSON file {"clusters":[[...]],"gaps":[...]}')
    p.add_argument("--clusters-alt", required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--term-budget", type=int, default=200_000)
    p.add_argument("--float", action="store_true",
                   help="append float convenience columns")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_asym)

    p = sub.add_parser("render", help="SVG of a region or one tiling")
    add_spec(p)
    p.add_argument("--tiling", type=int, default=None,
                   help="index into the deterministic tiling enumeration")
    p.add_argument("--unit", type=float, default=24.0, help="pixels per unit")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("corpus", help="regenerate the cross-engine corpus")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--size", type=int, default=300)
    p.add_argument("--max-L", type=int, default=8, dest="max_L")
    p.set_defaults(func=_cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; keep 2 for failed checks only
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except (SpecError, RegionTooLarge, TermBudgetExceeded, OSError,
            json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
