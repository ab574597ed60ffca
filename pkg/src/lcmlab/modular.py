"""Roots of f modulo p and modulo prime powers.

Simple roots lift uniquely by a Newton step (Hensel); roots at ramified
primes are lifted exhaustively over all p candidates per level.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass

from . import gfpoly
from .polynomial import IntPoly


class CapExceeded(RuntimeError):
    """p^k exceeds the value cap; lifting past this level is pointless."""


# Below this, roots mod p are found by direct scan; above, by
# gcd(x^p - x, f) plus equal-degree splitting.
SCAN_THRESHOLD = 2048


@dataclass(frozen=True)
class RootSet:
    """Residues r in [0, p^k - 1] with p^k | f(r)."""

    p: int
    k: int
    roots: tuple
    simple_flags: tuple  # per root: f'(r) invertible mod p

    def __post_init__(self):
        if len(self.roots) != len(self.simple_flags):
            raise ValueError("roots and simple_flags must align")


def roots_mod_p(f: IntPoly, p, seed=0):
    """All residues r in [0, p-1] with p | f(r), as a level-1 RootSet."""
    return _roots_mod_p_cached(f, p, seed)


@functools.lru_cache(maxsize=None)
def _roots_mod_p_cached(f, p, seed):
    if p <= SCAN_THRESHOLD:
        roots = tuple(r for r in range(p) if f.eval(r) % p == 0)
    else:
        fred = gfpoly.reduce_mod(f.coeffs, p)
        if not fred:
            raise ValueError(f"f vanishes identically mod {p}")
        if gfpoly.deg(fred) == 0:
            roots = ()
        else:
            g = gfpoly.frobenius_root_poly(fred, p)
            if gfpoly.deg(g) == 0:
                roots = ()
            else:
                rng = random.Random((seed << 20) ^ p)
                roots = tuple(gfpoly.roots_of_split(g, p, rng))
    flags = tuple(f.deriv_eval(r) % p != 0 for r in roots)
    return RootSet(p=p, k=1, roots=roots, simple_flags=flags)


def lift_roots(f: IntPoly, prev: RootSet, cap):
    """Roots of f mod p^k from the roots mod p^(k-1).

    Simple roots get their unique Newton lift; non-simple roots are tested
    against all p candidates. Raises CapExceeded when p^k > cap.
    """
    p = prev.p
    k = prev.k + 1
    pk = p**k
    if pk > cap:
        raise CapExceeded(f"{p}^{k} exceeds cap {cap}")
    pk_prev = pk // p
    roots = []
    flags = []
    for r, simple in zip(prev.roots, prev.simple_flags):
        if simple:
            fr = f.eval(r)
            inv = pow(f.deriv_eval(r) % pk, -1, pk)
            lifted = (r - fr * inv) % pk
            roots.append(lifted)
            flags.append(True)
        else:
            for t in range(p):
                cand = r + t * pk_prev
                if f.eval(cand) % pk == 0:
                    roots.append(cand)
                    flags.append(False)
    order = sorted(range(len(roots)), key=roots.__getitem__)
    return RootSet(
        p=p,
        k=k,
        roots=tuple(roots[i] for i in order),
        simple_flags=tuple(flags[i] for i in order),
    )


def count_progression(r, m, N):
    """#{n in [1, N]: n = r mod m} for 0 <= r < m."""
    if not 0 <= r < m:
        raise ValueError("residue out of range")
    if N < 0:
        raise ValueError("N must be >= 0")
    if r == 0:
        return N // m
    if r > N:
        return 0
    return (N - r) // m + 1
