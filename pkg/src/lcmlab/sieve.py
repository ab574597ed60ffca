"""Exact prime-exponent ledger of Q(N) = prod |f(n)|.

Three legs: analytic per-prime data for p <= B via root lifting, a
segmented residual-division pass over n in [1, N] that cross-checks the
analytic totals, and rho factorization of the surviving cofactors (all of
whose primes exceed B).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import modular, primes, polynomial
from .modular import CapExceeded, count_progression, lift_roots, roots_mod_p
from .polynomial import IntPoly, PolyProfile


class LedgerMismatch(RuntimeError):
    """Analytic per-prime totals disagree with the sieved exponents."""


DEFAULT_SEGMENT_SIZE = 1 << 16
RHO_MAX_ITERS = 1 << 20
RHO_ATTEMPTS = 8


@dataclass(frozen=True)
class PrimeLocalData:
    """Per-prime statistics of Q(N).

    layer_counts[i] = b_{i+1} = #{n <= N : p^(i+1) | f(n)}; trailing zeros
    are never stored, so max_exp == len(layer_counts).
    """

    p: int
    alpha: int
    max_exp: int
    hit_count: int
    layer_counts: tuple
    roots: tuple  # level-1 roots of f mod p

    def layer(self, i):
        """b_i for i >= 1."""
        if i < 1:
            raise ValueError("layers are 1-indexed")
        return self.layer_counts[i - 1] if i <= len(self.layer_counts) else 0


@dataclass
class FactorLedger:
    """The exact factorization of Q(N) for one (f, N) run."""

    f: IntPoly
    N: int
    B: int
    entries: dict  # prime -> PrimeLocalData
    skipped_zero_count: int
    profile: PolyProfile
    seed: int = 0

    def primes_above(self, bound):
        return sorted(p for p in self.entries if p > bound)


def local_data(f: IntPoly, p, N, cap, seed=0, zeros=()):
    """Exact PrimeLocalData for one prime p <= B via root lifting.

    ``zeros`` are the integer roots of f in [1, N] (nonempty only for
    reducible f); the n with f(n) = 0 are excluded from every layer.
    """
    zero_count = len(zeros)
    rs = roots_mod_p(f, p, seed=seed)
    layers = []
    while rs.roots:
        pk = p**rs.k
        if pk > cap:
            break
        cnt = sum(count_progression(r, pk, N) for r in rs.roots) - zero_count
        if cnt <= 0:
            break
        layers.append(cnt)
        try:
            rs = lift_roots(f, rs, cap)
        except CapExceeded:
            break
    alpha = sum(layers)
    level1 = roots_mod_p(f, p, seed=seed).roots
    return PrimeLocalData(
        p=p,
        alpha=alpha,
        max_exp=len(layers),
        hit_count=layers[0] if layers else 0,
        layer_counts=tuple(layers),
        roots=level1,
    )


def _local_chunk(args):
    coeffs, prime_chunk, N, cap, seed, zeros = args
    f = IntPoly(coeffs)
    out = []
    for p in prime_chunk:
        data = local_data(f, p, N, cap, seed=seed, zeros=zeros)
        if data.alpha > 0:
            out.append(data)
    return out


def factor_cofactor(c, seed=0):
    """Factor a residual cofactor (all prime factors exceed the sieve
    bound) into a sorted list of (prime, exponent)."""
    if c <= 1:
        raise ValueError("cofactor must exceed 1")
    return primes.factorize(
        c, seed=seed, max_iters=RHO_MAX_ITERS, attempts=RHO_ATTEMPTS
    )


def build_ledger(
    f: IntPoly,
    N,
    B=None,
    seed=0,
    workers=1,
    segment_size=DEFAULT_SEGMENT_SIZE,
):
    """The exact FactorLedger of Q(N). B defaults to D*N and may only be
    raised above it."""
    prof = polynomial.profile(f, seed=seed)
    if B is None:
        B = prof.D * N
    if N >= 1 and B < prof.D * N:
        raise ValueError(f"sieve bound {B} below D*N = {prof.D * N}")
    if N <= 0:
        return FactorLedger(
            f=f, N=N, B=B, entries={}, skipped_zero_count=0, profile=prof, seed=seed
        )

    cap = polynomial.max_abs_on_range(f, N)
    zeros = tuple(polynomial.integer_roots_in_range(f, N))

    # Leg 1: analytic data for every prime <= B with a root.
    entries = {}
    prime_list = primes.sieve_primes(B)
    if workers > 1:
        chunk_size = max(64, len(prime_list) // (workers * 8) + 1)
        chunks = [
            (f.coeffs, prime_list[i : i + chunk_size], N, cap, seed, zeros)
            for i in range(0, len(prime_list), chunk_size)
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk_result in pool.map(_local_chunk, chunks):
                for data in chunk_result:
                    entries[data.p] = data
    else:
        for p in prime_list:
            data = local_data(f, p, N, cap, seed=seed, zeros=zeros)
            if data.alpha > 0:
                entries[data.p] = data

    # Leg 2 + 3: segmented residual division and cofactor factorization.
    removed = {p: 0 for p in entries}
    large = {}  # prime > B -> list of per-n valuations
    skipped = 0
    lo = 1
    while lo <= N:
        hi = min(lo + segment_size - 1, N)
        values = [abs(f.eval(n)) for n in range(lo, hi + 1)]
        for n0 in zeros:
            if lo <= n0 <= hi:
                skipped += 1
        for p, data in entries.items():
            for r in data.roots:
                start = lo + (r - lo) % p
                for n in range(start, hi + 1, p):
                    if values[n - lo] == 0:
                        continue
                    v = values[n - lo]
                    e = 0
                    while v % p == 0:
                        v //= p
                        e += 1
                    values[n - lo] = v
                    removed[p] += e
        for idx, v in enumerate(values):
            if v <= 1:
                continue
            if v < B * B:
                fac = [(v, 1)]  # all factors > B and v < B^2 forces primality
            else:
                fac = factor_cofactor(v, seed=seed)
            for q, e in fac:
                if q <= B:
                    raise LedgerMismatch(
                        f"prime {q} <= B survived the sieve at n={lo + idx}"
                    )
                large.setdefault(q, []).append(e)
        lo = hi + 1

    for p, data in entries.items():
        if removed[p] != data.alpha:
            raise LedgerMismatch(
                f"p={p}: analytic alpha {data.alpha} != sieved {removed[p]}"
            )

    for q, vals in large.items():
        alpha = sum(vals)
        max_exp = max(vals)
        layers = tuple(
            sum(1 for v in vals if v >= i) for i in range(1, max_exp + 1)
        )
        entries[q] = PrimeLocalData(
            p=q,
            alpha=alpha,
            max_exp=max_exp,
            hit_count=len(vals),
            layer_counts=layers,
            roots=(),
        )

    entries = dict(sorted(entries.items()))
    return FactorLedger(
        f=f,
        N=N,
        B=B,
        entries=entries,
        skipped_zero_count=skipped,
        profile=prof,
        seed=seed,
    )
