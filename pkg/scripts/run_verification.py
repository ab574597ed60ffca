#!/usr/bin/env python3
"""Run the full verification battery for a set of polynomials.

For each polynomial: build one ledger at --n, run every registered check,
and print a one-line status per check plus the headline empirical constants.
Exits nonzero if any check fails. Typical run:

    python scripts/run_verification.py --polys "x^2+1,x^3+2,2x^3-x+7" --n 2000
"""

import argparse
import json
import sys

from lcmlab.analysis import CHECK_NAMES, run_checks
from lcmlab.polynomial import parse_poly


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--polys", default="x^2+1,x^2+x+1,x^3+2,2x^3-x+7")
    ap.add_argument("--n", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--json-out", default=None,
                    help="optional path for the full machine-readable report")
    args = ap.parse_args(argv)

    all_docs = []
    failed = False
    for spec in args.polys.split(","):
        f = parse_poly(spec.strip())
        print(f"== {f}  N={args.n}")
        reports = run_checks(
            f, args.n, list(CHECK_NAMES), seed=args.seed, workers=args.workers
        )
        for rep in reports:
            consts = ", ".join(
                f"{k}={v:.4g}" if isinstance(v, float) else f"{k}={v}"
                for k, v in sorted(rep.empirical_constants.items())
            )
            print(f"  [{rep.status:>14}] {rep.check_name:<24} {consts}")
            if rep.status == "fail":
                failed = True
                for v in rep.violations[:5]:
                    print(f"      violation: {v}")
        all_docs.append({"poly": str(f), "reports": [r.to_dict() for r in reports]})

    if args.json_out:
        with open(args.json_out, "w") as fh:
            json.dump(
                {"N": args.n, "seed": args.seed, "polys": all_docs},
                fh, indent=2, sort_keys=True,
            )
        print(f"-> {args.json_out}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
