#!/usr/bin/env python3
"""Cross-check the sieve pipeline against the brute-force oracle.

Builds both the sieve ledger and the naive gcd-chain ledger for every N in
a range and reports the first mismatch, if any. Useful when touching the
sieve or the modular lifting code. Typical run:

    python scripts/compare_oracle.py --poly "x^3+2" --n-max 300
"""

import argparse
import sys

from lcmlab.oracle import log_big, naive_run
from lcmlab.aggregate import summarize
from lcmlab.polynomial import parse_poly
from lcmlab.sieve import build_ledger


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--poly", default="x^2+1")
    ap.add_argument("--n-max", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    f = parse_poly(args.poly)
    for N in range(1, args.n_max + 1):
        led = build_ledger(f, N, seed=args.seed)
        ora = naive_run(f, N)
        sieve_map = {
            p: (e.alpha, e.max_exp, e.hit_count) for p, e in led.entries.items()
        }
        oracle_map = {
            p: (e.alpha, e.max_exp, e.hit_count)
            for p, e in ora.ledger.entries.items()
        }
        if sieve_map != oracle_map:
            bad = sorted(
                p
                for p in set(sieve_map) | set(oracle_map)
                if sieve_map.get(p) != oracle_map.get(p)
            )
            diff = {p: (sieve_map.get(p), oracle_map.get(p)) for p in bad}
            print(f"MISMATCH at N={N}: {diff}")
            return 1
        rec = summarize(led)
        if ora.lcm_value > 1:
            rel = abs(rec.log_L - log_big(ora.lcm_value)) / rec.log_L
            if rel > 1e-9:
                print(f"MISMATCH at N={N}: log_L off by rel {rel:.2e}")
                return 1
    print(f"ok: {args.poly} identical to oracle for N = 1..{args.n_max}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
