#!/usr/bin/env python3
"""Write a small corpus of sample instances, one file per generator family."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from maxdom.instances import FAMILIES, GeneratorSpec, generate, serialize


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=Path, default=Path("corpus"))
    ap.add_argument("--n", type=int, default=200)
    ap.add_argument("--m", type=int, default=8)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    for family in FAMILIES:
        inst = generate(GeneratorSpec(family, args.n, args.m, args.k, seed=args.seed))
        path = args.out_dir / f"{family}_n{inst.n}_m{inst.m}_k{inst.k}_s{args.seed}.txt"
        serialize(inst, path)
        print(f"{path}  (n={inst.n} m={inst.m} k={inst.k})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
