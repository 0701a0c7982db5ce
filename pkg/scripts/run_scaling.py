#!/usr/bin/env python3
"""Measure how the solver's stages scale with the query count m and budget k.

Prints per-stage timings and the log-log slopes of the dp stage; optionally
writes the raw rows as CSV.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from maxdom import bench
from maxdom.instances import GeneratorSpec, generate


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--quick", action="store_true", help="smaller sweep")
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--csv", type=Path, default=None)
    args = ap.parse_args()

    ms = [64, 128, 256] if args.quick else [64, 128, 256, 512]
    ks = [1, 2, 4, 8] if args.quick else [1, 2, 4, 8, 16]

    bench.time_pipeline(generate(GeneratorSpec("uniform", 2000, 128, 8, seed=0)), reps=1)  # warmup

    rows_m = bench.sweep("uniform", [500], ms, [16], reps=args.reps, seed=1)
    rows_k = bench.sweep("uniform", [2000], [256], ks, reps=args.reps, seed=2)

    print(f"{'sweep':<8}{'n':>7}{'m':>6}{'k':>4}  {'dp seconds':>12}")
    for rows, axis in ((rows_m, "m"), (rows_k, "k")):
        for r in rows:
            if r["stage"] == "dp":
                print(f"{axis:<8}{r['n']:>7}{r['m']:>6}{r['k']:>4}  {r['seconds']:>12.6f}")

    xs, ys = bench.stage_series(rows_m, "dp", "m")
    print(f"\ndp-stage log-log slope vs m: {bench.fit_loglog(xs, ys):.3f} (quadratic ~= 2)")
    xs, ys = bench.stage_series(rows_k, "dp", "k")
    print(f"dp-stage log-log slope vs k: {bench.fit_loglog(xs, ys):.3f} (linear ~= 1)")

    if args.csv:
        args.csv.write_text(bench.to_csv(rows_m + rows_k))
        print(f"csv written to {args.csv}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
