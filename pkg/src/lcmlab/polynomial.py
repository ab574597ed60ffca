"""Integer polynomials and their derived constants.

Everything downstream (root lifting, the ledger, the verification checks) consumes
an IntPoly together with its PolyProfile: discriminant, ramified primes,
and the linear-zone constant D = 1 + d*|f_d|.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import gfpoly, primes


class ZeroDiscriminant(ValueError):
    """f is not squarefree; multiplicity analysis downstream is meaningless."""


@dataclass(frozen=True)
class IntPoly:
    """f(x) = sum coeffs[i] * x^i with coeffs[-1] != 0 and degree >= 1."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) < 2:
            raise ValueError("degree must be at least 1")
        if coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def eval(self, n):
        """f(n), exact, by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def deriv_coeffs(self):
        """Coefficients of f', ascending (length d; may be constant)."""
        return tuple(i * c for i, c in enumerate(self.coeffs) if i >= 1)

    def deriv_eval(self, n):
        acc = 0
        for c in reversed(self.deriv_coeffs()):
            acc = acc * n + c
        return acc

    def __str__(self):
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                x = "x" if i == 1 else f"x^{i}"
                body = x if mag == 1 else f"{mag}*{x}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"{sign}{body}")
        return "".join(terms) if terms else "0"


@dataclass(frozen=True)
class PolyProfile:
    """Derived constants of f used by every zone and verification computation."""

    disc: int
    D: int
    ramified_primes: frozenset
    irreducible_hint: str  # "proved" | "assumed" | "unknown"
    rational_roots: tuple  # Fractions; nonempty means f is reducible


_TERM_RE = re.compile(
    r"^([+-]?)\s*(?:(\d+)\s*\*?\s*)?(x(?:\^(\d+))?)?$"
)


def parse_poly(text):
    """Parse the polynomial grammar: an ascending coefficient list
    "f0,f1,...,fd" or symbolic terms like "x^3 - 2*x + 7"."""
    text = text.strip().replace("−", "-")
    if not text:
        raise ValueError("empty polynomial")
    if "x" not in text:
        parts = [s.strip() for s in text.split(",")]
        if len(parts) < 2:
            raise ValueError("coefficient list needs at least two entries")
        try:
            return IntPoly(tuple(int(s) for s in parts))
        except ValueError as exc:
            raise ValueError(f"bad coefficient list {text!r}: {exc}") from None
    squashed = text.replace(" ", "")
    chunks = re.findall(r"[+-]?[^+-]+", squashed)
    if not chunks or "".join(chunks) != squashed:
        raise ValueError(f"cannot parse polynomial {text!r}")
    coeffs = {}
    for chunk in chunks:
        m = _TERM_RE.match(chunk)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"bad term {chunk!r} in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) is not None else 1
        if m.group(3) is None:
            power = 0
        elif m.group(4) is not None:
            power = int(m.group(4))
        else:
            power = 1
        coeffs[power] = coeffs.get(power, 0) + sign * coeff
    d = max(coeffs)
    return IntPoly(tuple(coeffs.get(i, 0) for i in range(d + 1)))


def _pseudo_rem(a, b):
    """Pseudo-remainder prem(a, b) over Z, coefficients ascending."""
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    da = len(a) - 1
    e = da - db + 1
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        shift = len(a) - 1 - db
        top = a[-1]
        a = [c * lead for c in a]
        for i, bc in enumerate(b):
            a[shift + i] -= top * bc
        e -= 1
        while a and a[-1] == 0:
            a.pop()
    if e > 0:
        a = [c * lead**e for c in a]
    return a


def resultant(a, b):
    """Res(a, b) over Z via the subresultant PRS, exact."""
    a = list(a)
    b = list(b)
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if not a or not b:
        return 0
    s = 1
    if len(a) < len(b):
        if (len(a) - 1) % 2 == 1 and (len(b) - 1) % 2 == 1:
            s = -s
        a, b = b, a
    g = h = 1
    while len(b) - 1 > 0:
        delta = (len(a) - 1) - (len(b) - 1)
        if (len(a) - 1) % 2 == 1 and (len(b) - 1) % 2 == 1:
            s = -s
        r = _pseudo_rem(a, b)
        while r and r[-1] == 0:
            r.pop()
        a = b
        denom = g * h**delta
        b = [c // denom for c in r]
        g = a[-1]
        h = g**delta // h ** (delta - 1) if delta > 0 else h
        if not b:
            return 0
    da = len(a) - 1
    return s * (b[0] ** da // h ** (da - 1))


def discriminant(f: IntPoly):
    """disc(f) = (-1)^(d(d-1)/2) * Res(f, f') / f_d, exact."""
    d = f.degree
    res = resultant(f.coeffs, f.deriv_coeffs())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * res // f.coeffs[-1]


def rational_roots(f: IntPoly):
    """All rational roots of f, via the rational root test."""
    c0 = f.coeffs[0]
    cd = f.coeffs[-1]
    roots = set()
    if c0 == 0:
        roots.add(Fraction(0))
        # strip x factors so the test below sees a nonzero constant term
        coeffs = list(f.coeffs)
        while coeffs[0] == 0:
            coeffs.pop(0)
        if len(coeffs) < 2:
            return tuple(sorted(roots))
        c0 = coeffs[0]
        probe = IntPoly(tuple(coeffs))
    else:
        probe = f
    for q in _divisors(abs(cd)):
        for p_ in _divisors(abs(c0)):
            for cand in (Fraction(p_, q), Fraction(-p_, q)):
                if _eval_fraction(probe, cand) == 0:
                    roots.add(cand)
    return tuple(sorted(roots))


def _eval_fraction(f, x):
    acc = Fraction(0)
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def _divisors(n):
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


_CERTIFYING_PRIME_BOUND = 200


def profile(f: IntPoly, seed=0):
    """Discriminant, ramified primes, D, and an irreducibility hint.

    hint = "proved" when f mod p is irreducible for some prime p < 200, or
    when d <= 3 and f has no rational root. "assumed" for d >= 4 without a
    certificate. "unknown" when a rational root exists (f is reducible).
    """
    if f.degree < 2:
        raise ValueError("profile needs degree >= 2")
    disc = discriminant(f)
    if disc == 0:
        raise ZeroDiscriminant(f"{f} is not squarefree")
    ad = abs(disc)
    ramified = frozenset(p for p, _ in primes.factorize(ad, seed=seed)) if ad > 1 else frozenset()
    D = 1 + f.degree * abs(f.coeffs[-1])
    rr = rational_roots(f)
    hint = None
    if not rr:
        for p in primes.sieve_primes(_CERTIFYING_PRIME_BOUND):
            if f.coeffs[-1] % p == 0:
                continue
            if gfpoly.is_irreducible(gfpoly.reduce_mod(f.coeffs, p), p):
                hint = "proved"
                break
        if hint is None:
            hint = "proved" if f.degree <= 3 else "assumed"
    else:
        hint = "unknown"
    return PolyProfile(
        disc=disc,
        D=D,
        ramified_primes=ramified,
        irreducible_hint=hint,
        rational_roots=rr,
    )


def integer_roots_in_range(f: IntPoly, N):
    """Integer roots of f inside [1, N] (nonempty only for reducible f)."""
    out = []
    for r in rational_roots(f):
        if r.denominator == 1 and 1 <= r.numerator <= N:
            out.append(int(r))
    return sorted(out)


def max_abs_on_range(f: IntPoly, N):
    """max over 1 <= n <= N of |f(n)|, exact.

    Candidates are the endpoints plus integer neighborhoods of the real
    critical points of f, so the scan is O(d) rather than O(N).
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    cands = {1, N}
    dcoeffs = f.deriv_coeffs()
    if len(dcoeffs) >= 2:  # f' nonconstant: locate its real roots
        for z in np.roots(list(reversed(dcoeffs))):
            if abs(z.imag) < 1e-8:
                x = float(z.real)
                for m in range(math.floor(x) - 1, math.ceil(x) + 2):
                    if 1 <= m <= N:
                        cands.add(m)
    return max(abs(f.eval(m)) for m in cands)
