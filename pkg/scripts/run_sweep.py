#!/usr/bin/env python3
"""Sweep the lcm growth ratios over a geometric schedule of N.

Writes one CSV per polynomial under --outdir and prints a short trend table
to stdout. Typical run:

    python scripts/run_sweep.py --polys "x^2+1,x^2+x+1,x^3+2" \
        --n-geom 100:100000:10 --outdir results/
"""

import argparse
import math
import os
import sys

from lcmlab.aggregate import sweep
from lcmlab.cli import CSV_COLUMNS, record_row
from lcmlab.polynomial import parse_poly, profile


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--polys", default="x^2+1,x^3+2")
    ap.add_argument("--n-geom", default="100:100000:10",
                    help="start:stop:factor geometric schedule")
    ap.add_argument("--outdir", default="results")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=0,
                    help="0 = library default / LCMLAB_WORKERS")
    args = ap.parse_args(argv)

    start, stop, factor = (int(x) for x in args.n_geom.split(":"))
    schedule = []
    n = start
    while n <= stop:
        schedule.append(n)
        n *= factor
    os.makedirs(args.outdir, exist_ok=True)

    for spec in args.polys.split(","):
        f = parse_poly(spec.strip())
        prof = profile(f)
        d = f.degree
        print(f"== {f}  (d={d}, D={prof.D}, disc={prof.disc})")
        records, gaps = sweep(
            f, schedule, seed=args.seed, workers=args.workers or 1,
        )
        path = os.path.join(
            args.outdir, spec.strip().replace("^", "").replace("+", "_") + ".csv"
        )
        with open(path, "w") as fh:
            fh.write(",".join(CSV_COLUMNS) + "\n")
            for rec in records:
                fh.write(record_row(rec) + "\n")
        for rec in records:
            target = (d - 1) * rec.N * math.log(rec.N)
            print(
                f"  N={rec.N:>8}  log_L={rec.log_L:14.2f}"
                f"  (d-1)NlogN={target:14.2f}  ratio_L={rec.ratio_L:.6f}"
                f"  ratio_rad={rec.ratio_rad:.6f}"
            )
        for N, exc in gaps:
            print(f"  N={N}: skipped ({exc})", file=sys.stderr)
        print(f"  -> {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
