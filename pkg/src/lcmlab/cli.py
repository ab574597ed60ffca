"""Command-line surface: sweeps to CSV/JSON/NDJSON, verification reports,
per-prime dumps, oracle diffs, and divided-difference identity trials.

Outputs are byte-reproducible for a fixed config and seed regardless of
worker count (the wall-clock ``seconds`` column is the one exception).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

from . import aggregate, analysis, oracle, polynomial, sieve
from .modular import CapExceeded

SCHEMA_VERSION = "1"

CSV_COLUMNS = (
    "N",
    "log_Q",
    "log_QS",
    "log_QLI",
    "log_QL",
    "log_L",
    "log_rad",
    "ratio_L",
    "ratio_rad",
    "ratio_QS",
    "n_primes",
    "n_squareful",
    "n_repeated",
    "seconds",
)


@dataclass
class RunConfig:
    poly: polynomial.IntPoly
    schedule: list
    bound_rule: str  # "DN" or an explicit integer string
    seed: int
    workers: int
    output: str  # path or "-"
    fmt: str  # csv | json | ndjson


class ConfigError(ValueError):
    pass


def _fmt_float(x):
    if math.isnan(x):
        return "nan"
    return format(x, ".17g")


def _json_float(x):
    return None if math.isnan(x) else x


def record_row(record):
    return ",".join(
        [
            str(record.N),
            _fmt_float(record.log_Q),
            _fmt_float(record.log_QS),
            _fmt_float(record.log_QLI),
            _fmt_float(record.log_QL),
            _fmt_float(record.log_L),
            _fmt_float(record.log_rad),
            _fmt_float(record.ratio_L),
            _fmt_float(record.ratio_rad),
            _fmt_float(record.ratio_QS),
            str(record.n_primes),
            str(record.n_squareful),
            str(record.n_repeated),
            _fmt_float(record.seconds),
        ]
    )


def _record_dict(record):
    out = {}
    for col in CSV_COLUMNS:
        v = getattr(record, col)
        out[col] = _json_float(v) if isinstance(v, float) else v
    return out


def _parse_schedule(args):
    if args.n_geom:
        try:
            start, end, ratio = args.n_geom.split(":")
            start, end, ratio = int(start), int(end), float(ratio)
        except ValueError:
            raise ConfigError(f"bad geometric schedule {args.n_geom!r}")
        if ratio <= 1 or start < 1:
            raise ConfigError("geometric schedule needs start >= 1, ratio > 1")
        schedule = []
        x = float(start)
        while round(x) <= end:
            n = int(round(x))
            if not schedule or n > schedule[-1]:
                schedule.append(n)
            x *= ratio
        return schedule
    raw = (args.n or "").strip()
    if not raw:
        raise ConfigError("empty schedule")
    try:
        schedule = [int(s) for s in raw.split(",") if s.strip()]
    except ValueError:
        raise ConfigError(f"bad schedule {raw!r}")
    if not schedule:
        raise ConfigError("empty schedule")
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise ConfigError("schedule must be strictly increasing")
    return schedule


def _resolve_workers(args):
    env = os.environ.get("LCMLAB_WORKERS")
    raw = env if env else getattr(args, "workers", "1")
    if raw == "auto":
        return os.cpu_count() or 1
    try:
        w = int(raw)
    except ValueError:
        raise ConfigError(f"bad worker count {raw!r}")
    if w < 1:
        raise ConfigError("workers must be >= 1")
    return w


def _load_poly(args):
    try:
        f = polynomial.parse_poly(args.poly)
    except ValueError as exc:
        raise ConfigError(str(exc))
    if f.degree >= 2:
        prof = polynomial.profile(f, seed=getattr(args, "seed", 0))
        if prof.rational_roots:
            print(
                "warning: reducible: conjecture ratios not meaningful",
                file=sys.stderr,
            )
        elif prof.irreducible_hint == "assumed":
            print(
                "warning: irreducibility not certified; assuming it",
                file=sys.stderr,
            )
    return f


def _open_sink(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w"), True


def cmd_sweep(args):
    f = _load_poly(args)
    schedule = _parse_schedule(args)
    workers = _resolve_workers(args)
    bound_rule = args.sieve_bound
    if bound_rule != "DN":
        try:
            int(bound_rule)
        except ValueError:
            raise ConfigError(f"bad sieve bound {bound_rule!r}")
    out, close = _open_sink(args.out)
    try:
        header = (
            f"# lcmlab sweep v{SCHEMA_VERSION} seed={args.seed} "
            f'poly="{f}" bound={bound_rule} schedule={",".join(map(str, schedule))}'
        )
        if args.format == "csv":
            out.write(header + "\n")
            out.write(",".join(CSV_COLUMNS) + "\n")
            sink = lambda r: (out.write(record_row(r) + "\n"), out.flush())
            records, gaps = aggregate.sweep(
                f, schedule, bound_rule=bound_rule, sink=sink,
                seed=args.seed, workers=workers,
            )
        elif args.format == "ndjson":
            meta = {"version": SCHEMA_VERSION, "seed": args.seed, "poly": str(f)}
            out.write(json.dumps({"meta": meta}, sort_keys=True) + "\n")
            sink = lambda r: (
                out.write(json.dumps(_record_dict(r), sort_keys=True) + "\n"),
                out.flush(),
            )
            records, gaps = aggregate.sweep(
                f, schedule, bound_rule=bound_rule, sink=sink,
                seed=args.seed, workers=workers,
            )
        else:
            records, gaps = aggregate.sweep(
                f, schedule, bound_rule=bound_rule,
                seed=args.seed, workers=workers,
            )
            doc = {
                "version": SCHEMA_VERSION,
                "seed": args.seed,
                "poly": str(f),
                "records": [_record_dict(r) for r in records],
                "gaps": [{"N": n, "error": e} for n, e in gaps],
            }
            out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    finally:
        if close:
            out.close()
    for n, err in gaps:
        print(f"warning: N={n} failed: {err}", file=sys.stderr)
    return 2 if gaps else 0


def cmd_verify(args):
    f = _load_poly(args)
    workers = _resolve_workers(args)
    names = (
        list(analysis.CHECK_NAMES)
        if args.checks == "all"
        else [s.strip() for s in args.checks.split(",") if s.strip()]
    )
    try:
        reports = analysis.run_checks(
            f, args.n, names, seed=args.seed, workers=workers
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    doc = {
        "version": SCHEMA_VERSION,
        "seed": args.seed,
        "config": {"poly": str(f), "N": args.n, "checks": sorted(set(names))},
        "reports": [r.to_dict() for r in reports],
    }
    out, close = _open_sink(args.out)
    try:
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    finally:
        if close:
            out.close()
    return 0 if all(r.status != "fail" for r in reports) else 1


def cmd_local(args):
    f = _load_poly(args)
    cap = polynomial.max_abs_on_range(f, args.n)
    zeros = tuple(polynomial.integer_roots_in_range(f, args.n))
    data = sieve.local_data(f, args.p, args.n, cap, seed=args.seed, zeros=zeros)
    doc = {
        "version": SCHEMA_VERSION,
        "seed": args.seed,
        "poly": str(f),
        "N": args.n,
        "prime": data.p,
        "alpha": data.alpha,
        "max_exp": data.max_exp,
        "hit_count": data.hit_count,
        "layer_counts": list(data.layer_counts),
        "roots": list(data.roots),
    }
    print(json.dumps(doc, indent=2, sort_keys=True))
    return 0


def cmd_oracle_check(args):
    f = _load_poly(args)
    try:
        ora = oracle.naive_run(f, args.n)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    led = sieve.build_ledger(f, args.n, seed=args.seed, workers=_resolve_workers(args))
    diffs = []
    for p in sorted(set(ora.ledger.entries) | set(led.entries)):
        a = ora.ledger.entries.get(p)
        b = led.entries.get(p)
        if a is None or b is None:
            diffs.append(f"p={p}: present only in {'sieve' if a is None else 'oracle'}")
            continue
        for fieldname in ("alpha", "max_exp", "hit_count", "layer_counts"):
            if getattr(a, fieldname) != getattr(b, fieldname):
                diffs.append(
                    f"p={p}: {fieldname} oracle={getattr(a, fieldname)} "
                    f"sieve={getattr(b, fieldname)}"
                )
    if diffs:
        for line in diffs:
            print(line, file=sys.stderr)
        return 1
    print(f"identical: {len(led.entries)} primes, N={args.n}, poly={f}")
    return 0


def cmd_identity(args):
    f = _load_poly(args)
    ledger = sieve.build_ledger(f, max(args.n, 1), seed=args.seed)
    report = analysis.check_divided_difference(
        ledger, seed=args.seed, trials=args.trials
    )
    print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    return 0 if report.status != "fail" else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lcmlab",
        description="Exact lcm/radical/prime-exponent statistics of "
        "polynomial values, with verification suites for the underlying bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_workers=True):
        p.add_argument("--poly", required=True, help="polynomial text")
        p.add_argument("--seed", type=int, default=0)
        if with_workers:
            p.add_argument(
                "--workers", default="1", help='worker count or "auto"'
            )

    p = sub.add_parser("sweep", help="multi-N sweep to CSV/JSON/NDJSON")
    common(p)
    p.add_argument("--n", default="", help="comma-separated N schedule")
    p.add_argument("--n-geom", default="", help="geometric schedule start:end:ratio")
    p.add_argument("--sieve-bound", default="DN", help='"DN" or explicit bound')
    p.add_argument("--out", default="-")
    p.add_argument("--format", choices=("csv", "json", "ndjson"), default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run verification checks at a single N")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--checks", default="all")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("local", help="dump PrimeLocalData for one prime")
    common(p, with_workers=False)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_local)

    p = sub.add_parser("oracle-check", help="diff sieve ledger vs brute force")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("identity", help="random divided-difference trials")
    common(p, with_workers=False)
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--trials", type=int, default=1000)
    p.set_defaults(func=cmd_identity)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
