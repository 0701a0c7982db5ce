"""Command-line front door: solve, verify, compress, generate, bench, render."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path
from time import perf_counter

from . import bench as bench_mod
from .cells import build_grid, compress
from .instances import FAMILIES, GeneratorSpec, generate, parse, serialize_text
from .model import Instance, weight_of_dom
from .oracle import oracle_solve
from .ranking import drop_uncovered, rank_transform
from .render import render_svg
from .solver import run_pipeline, solve_pipeline


def _load(args) -> Instance:
    inst = parse(args.path)
    if getattr(args, "k", None) is not None:
        inst = replace(inst, k=args.k)
    return inst


def _ints(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t]


def cmd_solve(args) -> int:
    inst = _load(args)
    if args.algo == "oracle":
        t0 = perf_counter()
        sol = oracle_solve(inst)
        stages = {"oracle": perf_counter() - t0}
        compressed_size = None
    else:
        res = run_pipeline(inst, use_compression=not args.no_compress)
        sol, stages, compressed_size = res.solution, res.stage_seconds, res.compressed_size
    record = {
        "algo": args.algo,
        "file": str(args.path),
        "n": inst.n,
        "m": inst.m,
        "k": inst.k,
        "value": sol.value,
        "chosen": sorted(sol.chosen),
        "compressed_size": compressed_size,
        "stages": {s: round(t, 6) for s, t in stages.items()},
        "total_seconds": round(sum(stages.values()), 6),
    }
    print(json.dumps(record))
    return 0


def cmd_verify(args) -> int:
    inst = _load(args)
    sol_oracle = oracle_solve(inst, limit=args.limit)
    sol_dp = solve_pipeline(inst, use_compression=True)
    sol_raw = solve_pipeline(inst, use_compression=False)
    recomputed = weight_of_dom(inst.P, [q for q in inst.Q if q.id in sol_dp.chosen])
    ok = sol_oracle.value == sol_dp.value == sol_raw.value == recomputed
    print(
        json.dumps(
            {
                "value_oracle": sol_oracle.value,
                "value_dp": sol_dp.value,
                "value_dp_no_compress": sol_raw.value,
                "recomputed_from_chosen": recomputed,
                "equal": ok,
            }
        )
    )
    return 0 if ok else 1


def cmd_compress(args) -> int:
    inst = _load(args)
    rr = drop_uncovered(rank_transform(inst))
    grid = build_grid(rr)
    comp = compress(grid, rr)
    bound = min(inst.n, inst.m**2)
    record = {
        "n": inst.n,
        "m": inst.m,
        "k": inst.k,
        "retained": len(rr.P),
        "nonempty_cells": len(grid.cells),
        "compressed_size": len(comp.points),
        "bound": bound,
        "bound_ok": len(comp.points) <= bound,
    }
    if args.out:
        Path(args.out).write_text(serialize_text(Instance(comp.points, rr.Q, inst.k)))
        record["out"] = str(args.out)
    print(json.dumps(record))
    return 0


def cmd_generate(args) -> int:
    spec = GeneratorSpec(args.family, args.n, args.m, args.k, (args.wmin, args.wmax), args.seed)
    text = serialize_text(generate(spec))
    if args.out:
        Path(args.out).write_text(text)
        print(args.out)
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args) -> int:
    rows = bench_mod.sweep(
        args.family,
        _ints(args.n),
        _ints(args.m),
        _ints(args.k),
        reps=args.reps,
        seed=args.seed,
        use_compression=not args.no_compress,
    )
    flagged = False
    print(f"{'family':<22}{'n':>9}{'m':>6}{'k':>4}  {'stage':<12}{'seconds':>10}")
    for r in rows:
        mark = ""
        if r["stage"] != "total" and r["seconds"] < bench_mod.UNDER_TIMED:
            mark, flagged = " *", True
        print(
            f"{r['family']:<22}{r['n']:>9}{r['m']:>6}{r['k']:>4}  "
            f"{r['stage']:<12}{r['seconds']:>10.6f}{mark}"
        )
    if flagged:
        print(f"* under-timed cell (< {bench_mod.UNDER_TIMED}s); treat with caution")
    ns, ms, ks = _ints(args.n), _ints(args.m), _ints(args.k)
    for axis, values, others in (("m", ms, (ns, ks)), ("k", ks, (ns, ms))):
        if len(set(values)) >= 3 and all(len(set(o)) == 1 for o in others):
            xs, ys = bench_mod.stage_series(rows, "dp", axis)
            print(f"dp-stage log-log slope vs {axis}: {bench_mod.fit_loglog(xs, ys):.3f}")
    if args.csv:
        Path(args.csv).write_text(bench_mod.to_csv(rows))
        print(f"csv written to {args.csv}")
    return 0


def cmd_render(args) -> int:
    inst = _load(args)
    chosen = None
    if args.chosen:
        chosen = set(_ints(args.chosen))
    elif args.solve:
        chosen = solve_pipeline(inst).chosen
    svg = render_svg(inst, chosen, scale=args.scale)
    out = args.out or f"{args.path}.svg"
    Path(out).write_text(svg)
    print(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxdom",
        description=(
            "Pick at most k query points whose closed lower-left quadrants cover "
            "the maximum total weight of a planar weighted point set."
        ),
        epilog=(
            "MAXDOM_POS_TABLE_ENTRIES bounds the optional precomputed column-order "
            "table of the coverage sweep (default 0: incremental, O(m) extra space)."
        ),
    )
    sub = parser.add_subparsers(required=True)

    p = sub.add_parser("solve", help="solve one instance file")
    p.add_argument("path", type=Path)
    p.add_argument("--k", type=int, default=None, help="override the file's budget")
    p.add_argument("--no-compress", action="store_true", help="skip the representative compression")
    p.add_argument("--algo", choices=("dp", "oracle"), default="dp")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="exhaustive solve (alias for solve --algo oracle)")
    p.add_argument("path", type=Path)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=cmd_solve, algo="oracle", no_compress=False)

    p = sub.add_parser("verify", help="cross-check the solver against the oracle")
    p.add_argument("path", type=Path)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--limit", type=int, default=1_000_000, help="oracle subset cap")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compress", help="inspect the representative compression")
    p.add_argument("path", type=Path)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--out", type=Path, default=None, help="write the compressed instance (rank coordinates)")
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("generate", help="emit a deterministic instance")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--wmin", type=int, default=-10)
    p.add_argument("--wmax", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="stage timings over a size sweep")
    p.add_argument("--family", choices=FAMILIES, default="uniform")
    p.add_argument("--n", default="2000", help="comma-separated n values")
    p.add_argument("--m", default="64,128,256", help="comma-separated m values")
    p.add_argument("--k", default="8", help="comma-separated k values")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-compress", action="store_true")
    p.add_argument("--csv", type=Path, default=None)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("render", help="write an SVG of cells, representatives, and picks")
    p.add_argument("path", type=Path)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--out", type=Path, default=None)
    p.add_argument("--scale", type=int, default=14)
    p.add_argument("--solve", action="store_true", help="overlay the solver's pick set")
    p.add_argument("--chosen", default=None, help="overlay these query ids (comma separated)")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
