"""Verification of the structural bounds against exact ledger data.

Checks with explicit finite bounds (alpha <= d^2, alpha <= d(d-1)/2,
b_i <= d-i, the symmetric-sum ratio range, integrality/divisibility of the
divided-difference quantity A) are asserted; statements whose constants
the theory leaves unspecified (Hensel deviation, squareful-prime ratios)
are report-only.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from . import aggregate, primes
from .modular import roots_mod_p
from .polynomial import IntPoly
from .sieve import FactorLedger, build_ledger


class NonIntegral(ArithmeticError):
    """The divided-difference sum failed to be an integer (impossible for
    a correct implementation; kept as a tripwire)."""


class PreconditionUnmet(ValueError):
    """A divisibility check was invoked on points that do not qualify."""


@dataclass
class VerificationReport:
    check_name: str
    poly: str
    N: int | None
    parameters: dict = field(default_factory=dict)
    status: str = "pass"  # "pass" | "fail" | "not-applicable"
    violations: list = field(default_factory=list)
    empirical_constants: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "check_name": self.check_name,
            "poly": self.poly,
            "N": self.N,
            "parameters": self.parameters,
            "status": self.status,
            "violations": [list(v) for v in self.violations],
            "empirical_constants": self.empirical_constants,
        }


def _finish(report, applicable=True):
    if not applicable:
        report.status = "not-applicable"
    else:
        report.status = "fail" if report.violations else "pass"
    return report


def check_naive_multiplicity(ledger: FactorLedger) -> VerificationReport:
    """alpha_p <= d^2 for p > N, plus the proof's sub-claims
    hit_count <= d and max_exp <= d."""
    d = ledger.f.degree
    report = VerificationReport(
        check_name="naive_multiplicity",
        poly=str(ledger.f),
        N=ledger.N,
        parameters={"bound": d * d},
    )
    zone = ledger.primes_above(ledger.N)
    for p in zone:
        data = ledger.entries[p]
        if data.alpha > d * d:
            report.violations.append((p, "alpha", data.alpha, d * d))
        if data.hit_count > d:
            report.violations.append((p, "hit_count", data.hit_count, d))
        if data.max_exp > d:
            report.violations.append((p, "max_exp", data.max_exp, d))
    return _finish(report, applicable=bool(zone))


def check_refined_multiplicity(ledger: FactorLedger) -> VerificationReport:
    """alpha_p <= d(d-1)/2 and b_i <= d-i for p > DN (i = 1 covers the
    hit_count <= d-1 bound)."""
    d = ledger.f.degree
    bound = d * (d - 1) // 2
    DN = ledger.profile.D * ledger.N
    report = VerificationReport(
        check_name="refined_multiplicity",
        poly=str(ledger.f),
        N=ledger.N,
        parameters={"bound": bound, "DN": DN},
    )
    zone = ledger.primes_above(DN)
    for p in zone:
        data = ledger.entries[p]
        if data.alpha > bound:
            report.violations.append((p, "alpha", data.alpha, bound))
        for i in range(1, d + 1):
            if data.layer(i) > d - i:
                report.violations.append((p, f"b_{i}", data.layer(i), d - i))
    return _finish(report, applicable=bool(zone))


def refined_multiplicity_threshold(f: IntPoly, n_max=1000, seed=0):
    """Smallest N0 such that the refined-multiplicity check has no
    violation for any N in [N0, n_max]; 1 if it never fails.

    One factorization pass over f(n), n <= n_max, then per-prime layer
    bookkeeping; no ledger builds.
    """
    from . import polynomial

    d = f.degree
    D = polynomial.profile(f, seed=seed).D
    hits = {}  # p -> list of (n, valuation) in n order
    for n in range(1, n_max + 1):
        v = f.eval(n)
        if v == 0:
            continue
        for p, e in primes.factorize(abs(v), seed=seed):
            hits.setdefault(p, []).append((n, e))
    worst = 0
    for p, lst in hits.items():
        n_upper = min(n_max, (p - 1) // D)  # N values with p > D*N
        if n_upper == 0:
            continue
        for i in range(1, d + 1):
            ns = [n for n, v in lst if v >= i]
            if len(ns) > d - i:
                first_bad = ns[d - i]  # (d-i+1)-th hit
                if first_bad <= n_upper:
                    worst = max(worst, n_upper)
    return worst + 1


def check_hensel_formula(ledger: FactorLedger, seed=0) -> VerificationReport:
    """Report-only: deviation of alpha_p from N rho_f(p)/(p-1) for
    unramified p <= N, scaled by ln p / ln N; ramified primes report
    alpha * p / N."""
    N = ledger.N
    report = VerificationReport(
        check_name="hensel_formula",
        poly=str(ledger.f),
        N=N,
        parameters={},
    )
    if N < 2:
        return _finish(report, applicable=False)
    ramified = ledger.profile.ramified_primes
    devs = []
    ram_stats = {}
    for p in sorted(ledger.entries):
        if p > N:
            break
        data = ledger.entries[p]
        if p in ramified:
            ram_stats[str(p)] = data.alpha * p / N
            continue
        rho = len(roots_mod_p(ledger.f, p, seed=seed).roots)
        dev = abs(data.alpha - N * rho / (p - 1)) * math.log(p) / math.log(N)
        devs.append(dev)
    if devs:
        devs.sort()
        report.empirical_constants = {
            "max_dev": devs[-1],
            "median_dev": devs[len(devs) // 2],
            "mean_dev": sum(devs) / len(devs),
            "n_primes": len(devs),
        }
    report.empirical_constants.update(
        {f"ramified_{k}": v for k, v in ram_stats.items()}
    )
    return _finish(report, applicable=bool(devs or ram_stats))


def complete_homogeneous(s, points):
    """h_s(points): sum of all degree-s monomials, exact."""
    if s < 0:
        raise ValueError("s must be >= 0")
    h = [0] * (s + 1)
    h[0] = 1
    for m in points:
        for j in range(1, s + 1):
            h[j] += m * h[j - 1]
    return h[s]


def divided_difference_A(f: IntPoly, points):
    """The divided-difference integer A for f at t distinct points,
    computed two ways (exact rational defining sum and the complete
    homogeneous symmetric expansion) and cross-asserted."""
    points = list(points)
    t = len(points)
    d = f.degree
    if not 2 <= t <= d + 1:
        raise ValueError(f"need 2 <= t <= d+1 points, got {t}")
    if len(set(points)) != t:
        raise ValueError("points must be distinct")
    direct = Fraction(0)
    for j, mj in enumerate(points):
        denom = 1
        for k, mk in enumerate(points):
            if k != j:
                denom *= mj - mk
        direct += Fraction(f.eval(mj), denom)
    i = d - t + 1  # expansion truncates at ell >= d - i
    expansion = 0
    for ell in range(d - i, d + 1):
        expansion += f.coeffs[ell] * complete_homogeneous(ell - (d - i), points)
    if direct.denominator != 1:
        raise NonIntegral(f"A = {direct} at points {points}")
    if direct != expansion:
        raise NonIntegral(
            f"routes disagree: {direct} vs {expansion} at points {points}"
        )
    return int(direct)


def check_divisibility_A(f: IntPoly, p, i, points) -> VerificationReport:
    """p^i | A for d-i+1 points m_j with p^i | f(m_j) and |m_j - m_k| < p."""
    points = list(points)
    d = f.degree
    t = d - i + 1
    report = VerificationReport(
        check_name="divisibility_A",
        poly=str(f),
        N=None,
        parameters={"p": p, "i": i, "points": points},
    )
    if t < 2 or len(points) != t:
        return _finish(report, applicable=False)
    pi = p**i
    for m in points:
        if f.eval(m) % pi != 0:
            raise PreconditionUnmet(f"p^{i} does not divide f({m})")
    for a, b in combinations(points, 2):
        if abs(a - b) >= p:
            raise PreconditionUnmet("point gap not below p")
    A = divided_difference_A(f, points)
    report.empirical_constants["A"] = float(A) if abs(A) < 2**53 else None
    if A % pi != 0:
        report.violations.append((tuple(points), "A mod p^i", A % pi, 0))
    return _finish(report)


def harvest_divisibility_tuples(ledger: FactorLedger, above="N", limit=200):
    """Qualifying (p, i, points) tuples read off the ledger's roots for
    primes above N (or DN): points are the n <= N hit by p with
    v_p(f(n)) >= i, taken when exactly enough for arity d - i + 1."""
    f = ledger.f
    d = f.degree
    N = ledger.N
    bound = N if above == "N" else ledger.profile.D * N
    tuples = []
    for p in ledger.primes_above(bound):
        # p > N: each root of f mod p yields at most one hit, the root itself
        hits = []
        for r in roots_mod_p(f, p, seed=ledger.seed).roots:
            if not 1 <= r <= N:
                continue
            fn = abs(f.eval(r))
            v = 0
            while fn and fn % p == 0:
                fn //= p
                v += 1
            if v:
                hits.append((r, v))
        for i in range(1, d + 1):
            t = d - i + 1
            if t < 2:
                continue
            ns = [n for n, v in hits if v >= i]
            if len(ns) >= t:
                for combo in combinations(ns, t):
                    tuples.append((p, i, combo))
                    if len(tuples) >= limit:
                        return tuples
    return tuples


def check_divided_difference(
    ledger: FactorLedger, seed=0, trials=1000
) -> VerificationReport:
    """Random two-route agreement trials for A plus divisibility and
    nonvanishing of A on every ledger-harvested tuple above DN."""
    f = ledger.f
    d = f.degree
    report = VerificationReport(
        check_name="divided_difference",
        poly=str(f),
        N=ledger.N,
        parameters={"trials": trials},
    )
    rng = random.Random(seed)
    for _ in range(trials):
        t = rng.randint(2, d + 1)
        points = rng.sample(range(1, 10**6), t)
        try:
            divided_difference_A(f, points)
        except NonIntegral as exc:
            report.violations.append((tuple(points), "non-integral", str(exc), 0))
    irreducible = ledger.profile.irreducible_hint in ("proved", "assumed")
    harvested = harvest_divisibility_tuples(ledger, above="DN")
    for p, i, combo in harvested:
        A = divided_difference_A(f, list(combo))
        if A % p**i != 0:
            report.violations.append((combo, f"p^{i} | A", A, p**i))
        if irreducible and A == 0:
            report.violations.append((combo, "A != 0", 0, "nonzero"))
    report.empirical_constants["harvested_tuples"] = len(harvested)
    return _finish(report)


def check_amgm_ratio(d, i, ell, points) -> VerificationReport:
    """The symmetric-sum ratio h_{ell-(d-i)}(m) / sum m_j^{ell-(d-i)} lies
    in [1, C(ell, d-i)/(d-i+1)], and that sharp bound is <= 2^d."""
    points = list(points)
    t = d - i + 1
    report = VerificationReport(
        check_name="amgm_ratio",
        poly="",
        N=None,
        parameters={"d": d, "i": i, "ell": ell, "points": points},
    )
    if not (1 <= i <= d) or not (d - i <= ell <= d) or len(points) != t:
        raise ValueError("need 1 <= i <= d, d-i <= ell <= d, d-i+1 points")
    if any(m <= 0 for m in points):
        raise ValueError("points must be positive")
    s = ell - (d - i)
    if s == 0:
        # numerator h_0 = 1 vs denominator t: the bracket presumes s > 0
        return _finish(report, applicable=False)
    num = complete_homogeneous(s, points)
    den = sum(m**s for m in points)
    ratio = Fraction(num, den)
    sharp = Fraction(comb(ell, d - i), d - i + 1)
    report.empirical_constants["ratio"] = float(ratio)
    report.empirical_constants["sharp_bound"] = float(sharp)
    if ratio < 1:
        report.violations.append((tuple(points), "ratio >= 1", float(ratio), 1))
    if ratio > sharp:
        report.violations.append(
            (tuple(points), "ratio <= sharp", float(ratio), float(sharp))
        )
    if sharp > 2**d:
        report.violations.append(("-", "sharp <= 2^d", float(sharp), 2**d))
    return _finish(report)


def check_amgm_suite(d, seed=0, cases_per_cell=100) -> VerificationReport:
    """Seeded random point sets for every admissible (i, ell) at degree d."""
    rng = random.Random(seed)
    report = VerificationReport(
        check_name="amgm_ratio",
        poly="",
        N=None,
        parameters={"d": d, "cases_per_cell": cases_per_cell},
    )
    max_ratio = 0.0
    max_sharp = 0.0
    for i in range(1, d + 1):
        for ell in range(d - i + 1, d + 1):  # s = ell-(d-i) >= 1
            for _ in range(cases_per_cell):
                points = [rng.randint(1, 10**6) for _ in range(d - i + 1)]
                sub = check_amgm_ratio(d, i, ell, points)
                report.violations.extend(sub.violations)
                max_ratio = max(max_ratio, sub.empirical_constants["ratio"])
                max_sharp = max(max_sharp, sub.empirical_constants["sharp_bound"])
    report.empirical_constants["max_ratio"] = max_ratio
    report.empirical_constants["max_sharp_bound"] = max_sharp
    return _finish(report)


def check_squareful_ratios(ledger: FactorLedger) -> VerificationReport:
    """Report-only: the two conjecture-equivalence ratios and the split of
    prime counts below/above DN."""
    record = aggregate.summarize(ledger)
    DN = ledger.profile.D * ledger.N
    below = sum(1 for p in ledger.entries if p <= DN)
    report = VerificationReport(
        check_name="squareful_ratios",
        poly=str(ledger.f),
        N=ledger.N,
        parameters={"DN": DN},
    )
    n = record.n_primes
    report.empirical_constants = {
        "n_primes": n,
        "n_squareful": record.n_squareful,
        "n_repeated": record.n_repeated,
        "squareful_ratio": record.n_squareful / n if n else 0.0,
        "repeated_ratio": record.n_repeated / n if n else 0.0,
        "primes_below_DN": below,
        "primes_above_DN": n - below,
    }
    return _finish(report, applicable=n > 0)


def check_zone_inequalities(ledger: FactorLedger) -> VerificationReport:
    """(d-1) log L >= log Q_L and (d(d-1)/2) log rad >= log Q_L."""
    record = aggregate.summarize(ledger)
    d = ledger.f.degree
    report = VerificationReport(
        check_name="zone_inequalities",
        poly=str(ledger.f),
        N=ledger.N,
        parameters={},
    )
    lhs_l = (d - 1) * record.log_L
    lhs_rad = d * (d - 1) / 2 * record.log_rad
    report.empirical_constants = {
        "log_QL": record.log_QL,
        "lcm_side": lhs_l,
        "radical_side": lhs_rad,
    }
    if lhs_l < record.log_QL:
        report.violations.append(("-", "(d-1) log_L >= log_QL", lhs_l, record.log_QL))
    if lhs_rad < record.log_QL:
        report.violations.append(
            ("-", "(d(d-1)/2) log_rad >= log_QL", lhs_rad, record.log_QL)
        )
    return _finish(report)


CHECK_NAMES = (
    "naive_multiplicity",
    "refined_multiplicity",
    "hensel_formula",
    "divided_difference",
    "amgm_ratio",
    "squareful_ratios",
    "zone_inequalities",
)


def run_checks(f: IntPoly, N, checks, seed=0, workers=1):
    """Build one ledger and run the named checks, sorted by check_name."""
    unknown = sorted(set(checks) - set(CHECK_NAMES))
    if unknown:
        raise ValueError(
            f"unknown checks {unknown}; valid: {', '.join(CHECK_NAMES)}"
        )
    ledger = build_ledger(f, N, seed=seed, workers=workers)
    reports = []
    for name in sorted(set(checks)):
        if name == "naive_multiplicity":
            reports.append(check_naive_multiplicity(ledger))
        elif name == "refined_multiplicity":
            reports.append(check_refined_multiplicity(ledger))
        elif name == "hensel_formula":
            reports.append(check_hensel_formula(ledger, seed=seed))
        elif name == "divided_difference":
            reports.append(check_divided_difference(ledger, seed=seed))
        elif name == "amgm_ratio":
            reports.append(check_amgm_suite(f.degree, seed=seed))
        elif name == "squareful_ratios":
            reports.append(check_squareful_ratios(ledger))
        elif name == "zone_inequalities":
            reports.append(check_zone_inequalities(ledger))
    return reports
