"""Exact real-root certification over the rationals.

Roots are isolated with Sturm sequences into disjoint half-open rational
intervals ``(lo, hi]``; an interval with ``lo == hi`` is an exact rational
root.  Interlacing ``p < q`` is decided by comparing the root multisets of
``p`` and ``q``: the two isolations are refined against each other until
every pair of roots is either separated or shown to coincide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .poly import Polynomial, reciprocal, DegreeError
from .ring import is_rational


def _check_rational(f: Polynomial):
    for c in f.coeffs:
        if not is_rational(c):
            raise TypeError("real-root routines need rational coefficients, got %r" % (c,))


def monic(f: Polynomial) -> Polynomial:
    if f.is_zero():
        return f
    lead = Fraction(f.leading())
    return Polynomial(Fraction(c) / lead for c in f.coeffs)


def _primitive(f: Polynomial) -> Polynomial:
    """Positive rational multiple of f with coprime integer coefficients."""
    if f.is_zero():
        return f
    fr = [Fraction(c) for c in f.coeffs]
    den = 1
    for c in fr:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in fr]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return Polynomial([c // g for c in ints])


def _prem(a: list, b: list) -> list:
    """Pseudo-remainder of integer coefficient lists (low degree first)."""
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(a) - 1 >= db and any(a):
        k = len(a) - 1 - db
        la = a[-1]
        a = [c * lb for c in a]
        for i, c in enumerate(b):
            a[i + k] -= la * c
        while a and a[-1] == 0:
            a.pop()
    return a


@lru_cache(maxsize=8192)
def _gcd_primitive(f: Polynomial, g: Polynomial) -> Polynomial:
    a, b = _primitive(f), _primitive(g)
    if a.degree is not None and b.degree is not None and a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = _prem(list(a.coeffs), list(b.coeffs))
        a, b = b, _primitive(Polynomial(r))
    return a


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor over Q (primitive remainder sequence)."""
    return monic(_gcd_primitive(f, g))


def squarefree_decomposition(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: monic squarefree factors with their multiplicities."""
    return list(_yun(f))


@lru_cache(maxsize=8192)
def _yun(f: Polynomial) -> tuple:
    if f.degree is None or f.degree == 0:
        return ()
    f = monic(f)
    fp = f.derivative()
    a = gcd(f, fp)
    b = f // a
    c = fp // a
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree and b.degree > 0:
        a = gcd(b, d)
        if a.degree and a.degree > 0:
            out.append((a, i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return tuple(out)


@lru_cache(maxsize=8192)
def squarefree_part(f: Polynomial) -> Polynomial:
    if f.degree is None or f.degree == 0:
        return monic(f)
    return monic(f // gcd(f, f.derivative()))


# -- Sturm sequences -----------------------------------------------------------


@lru_cache(maxsize=4096)
def sturm_sequence(f: Polynomial) -> tuple[Polynomial, ...]:
    seq = [_primitive(f), _primitive(f.derivative())]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        # positive rescaling keeps coefficients small; only signs matter
        r = _primitive(r)
        seq.append(-r)
    seq.pop()
    return tuple(seq)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs) -> int:
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _signs_at(seq, x) -> list[int]:
    if x is None:
        return []
    return [_sign(p(x)) for p in seq]


def _signs_at_infinity(seq, positive: bool) -> list[int]:
    out = []
    for p in seq:
        s = _sign(p.leading())
        if not positive and p.degree % 2 == 1:
            s = -s
        out.append(s)
    return out


def sturm_count(f: Polynomial, a=None, b=None) -> int:
    """Number of distinct real roots of f in (a, b]; None means infinity."""
    if f.is_zero():
        raise ValueError("sturm_count of the zero polynomial")
    _check_rational(f)
    if a is not None and b is not None and not a < b:
        raise ValueError("empty interval (%s, %s]" % (a, b))
    seq = sturm_sequence(squarefree_part(f))
    va = _variations(_signs_at_infinity(seq, False) if a is None else _signs_at(seq, a))
    vb = _variations(_signs_at_infinity(seq, True) if b is None else _signs_at(seq, b))
    return va - vb


@lru_cache(maxsize=8192)
def is_real_rooted(f: Polynomial) -> bool:
    _check_rational(f)
    if f.degree is None or f.degree == 0:
        return True
    s = squarefree_part(f)
    return sturm_count(s) == s.degree


# -- root isolation -------------------------------------------------------------


def cauchy_bound(f: Polynomial) -> Fraction:
    lead = Fraction(f.leading())
    return 1 + max((abs(Fraction(c) / lead) for c in f.coeffs[:-1]), default=Fraction(0))


@dataclass
class IsolatedRoot:
    lo: Fraction
    hi: Fraction
    multiplicity: int

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def interval(self) -> tuple[Fraction, Fraction]:
        return (self.lo, self.hi)


@dataclass
class RootIsolation:
    """Distinct real roots of ``squarefree_part`` in increasing order."""

    roots: list[IsolatedRoot]
    squarefree_part: Polynomial
    degree: int

    @property
    def real_root_count(self) -> int:
        return sum(r.multiplicity for r in self.roots)

    @property
    def real_rooted(self) -> bool:
        return self.real_root_count == self.degree

    def refine(self, i: int) -> None:
        """Halve the interval of root i (or pin it down exactly)."""
        r = self.roots[i]
        if r.exact:
            return
        s = self.squarefree_part
        mid = (r.lo + r.hi) / 2
        vm = s(mid)
        if vm == 0:
            r.lo = r.hi = mid
        elif _sign(vm) != _sign(s(r.hi)):
            r.lo = mid
        else:
            r.hi = mid

    def to_json(self) -> dict:
        from .ring import format_rational

        return {
            "degree": self.degree,
            "roots": [
                {"interval": [format_rational(r.lo), format_rational(r.hi)], "multiplicity": r.multiplicity}
                for r in self.roots
            ],
        }


def _isolate_squarefree(s: Polynomial) -> list[tuple[Fraction, Fraction]]:
    bound = cauchy_bound(s)
    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = sturm_count(s, lo, hi)
        if n == 0:
            continue
        if n == 1:
            if s(hi) == 0:
                out.append((hi, hi))
            else:
                out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    out.sort()
    return out


@lru_cache(maxsize=8192)
def _isolation_data(f: Polynomial):
    s = squarefree_part(f)
    factors = squarefree_decomposition(f)
    roots = []
    for lo, hi in _isolate_squarefree(s) if s.degree else []:
        mult = None
        for fac, m in factors:
            if lo == hi:
                hit = fac(lo) == 0
            else:
                hit = sturm_count(fac, lo, hi) == 1
            if hit:
                mult = m
                break
        assert mult is not None, "root not attributed to a squarefree factor"
        roots.append((lo, hi, mult))
    return s, tuple(roots)


def isolate_real_roots(f: Polynomial) -> RootIsolation:
    """Isolate the distinct real roots of a nonzero rational polynomial."""
    if f.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    _check_rational(f)
    s, roots = _isolation_data(f)
    return RootIsolation([IsolatedRoot(lo, hi, m) for lo, hi, m in roots], s, f.degree)


# -- interlacing -----------------------------------------------------------------


@dataclass
class InterlacingCertificate:
    verdict: bool
    witness: dict | None = None
    wronskian_sign: str = "0"
    isolations: dict = field(default_factory=dict)

    def __bool__(self):
        return self.verdict

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "witness": self.witness,
            "wronskian_sign": self.wronskian_sign,
            "isolations": {k: v.to_json() for k, v in self.isolations.items()},
        }


def wronskian(p: Polynomial, q: Polynomial) -> Polynomial:
    return p.derivative() * q - p * q.derivative()


def global_sign(w: Polynomial) -> str:
    """'+', '-', '0' if w is >= 0, <= 0, or == 0 on all of R; 'mixed' otherwise."""
    if w.is_zero():
        return "0"
    if w.degree > 0:
        for fac, m in squarefree_decomposition(w):
            if m % 2 == 1 and sturm_count(fac) > 0:
                return "mixed"
    return "+" if w.leading() > 0 else "-"


def _compare(iso_a: RootIsolation, i: int, iso_b: RootIsolation, j: int, gcd_cache: list) -> int:
    """Sign of (root i of a) - (root j of b)."""
    ra, rb = iso_a.roots[i], iso_b.roots[j]
    while True:
        if ra.exact and rb.exact:
            return _sign(ra.lo - rb.lo)
        if ra.exact:
            if ra.lo <= rb.lo:
                return -1
            if ra.lo > rb.hi:
                return 1
            if iso_b.squarefree_part(ra.lo) == 0:
                return 0
            iso_b.refine(j)
            continue
        if rb.exact:
            if rb.lo <= ra.lo:
                return 1
            if rb.lo > ra.hi:
                return -1
            if iso_a.squarefree_part(rb.lo) == 0:
                return 0
            iso_a.refine(i)
            continue
        if ra.hi <= rb.lo:
            return -1
        if rb.hi <= ra.lo:
            return 1
        # overlapping open intervals: equal iff a common factor vanishes there
        if not gcd_cache:
            gcd_cache.append(gcd(iso_a.squarefree_part, iso_b.squarefree_part))
        g = gcd_cache[0]
        if g.degree and sturm_count(g, max(ra.lo, rb.lo), min(ra.hi, rb.hi)) > 0:
            return 0
        iso_a.refine(i)
        iso_b.refine(j)


def _leq(x_iso, i, y_iso, j, cache) -> bool:
    return _compare(x_iso, i, y_iso, j, cache) <= 0


def _expand_desc(iso: RootIsolation) -> list[int]:
    out = []
    for idx in range(len(iso.roots) - 1, -1, -1):
        out.extend([idx] * iso.roots[idx].multiplicity)
    return out


def _interleaves(p: Polynomial, q: Polynomial, iso_p: RootIsolation, iso_q: RootIsolation):
    """Check alpha_1 >= beta_1 >= alpha_2 >= ... for q's zeros alpha, p's beta.

    Both polynomials have positive leading coefficients here.  Returns None
    on success or a witness dict.
    """
    a = _expand_desc(iso_q)
    b = _expand_desc(iso_p)
    if not (len(b) <= len(a) <= len(b) + 1):
        return {"reason": "root-count", "roots_p": len(b), "roots_q": len(a)}
    cache: list = []
    for i in range(len(b)):
        # alpha_i >= beta_i
        if not _leq(iso_p, b[i], iso_q, a[i], cache):
            return {"reason": "interleaving", "position": i, "pattern": "alpha_%d >= beta_%d" % (i + 1, i + 1)}
        # beta_i >= alpha_{i+1}
        if i + 1 < len(a) and not _leq(iso_q, a[i + 1], iso_p, b[i], cache):
            return {"reason": "interleaving", "position": i, "pattern": "beta_%d >= alpha_%d" % (i + 1, i + 2)}
    return None


def interlaces(p: Polynomial, q: Polynomial) -> InterlacingCertificate:
    """Decide p < q (zeros interlace and W[p,q] = p'q - pq' <= 0)."""
    _check_rational(p)
    _check_rational(q)
    for name, f in (("p", p), ("q", q)):
        if not is_real_rooted(f):
            return InterlacingCertificate(False, {"reason": "not-real-rooted", "polynomial": name})
    if p.is_zero() or q.is_zero():
        return InterlacingCertificate(True, None, "0")
    wsign = global_sign(wronskian(p, q))
    # Reduce to positive leading coefficients: p < q iff -p < -q iff -q < p.
    flips = 0
    if p.leading() < 0 and q.leading() < 0:
        pp, qq = -p, -q
    elif p.leading() > 0 and q.leading() > 0:
        pp, qq = p, q
    elif p.leading() > 0:
        pp, qq = -q, p
        flips = 1
    else:
        pp, qq = q, -p
        flips = 1
    iso_p = isolate_real_roots(pp)
    iso_q = isolate_real_roots(qq)
    isolations = {"p": isolate_real_roots(p), "q": isolate_real_roots(q)}
    dp, dq = pp.degree, qq.degree
    if not (dq == dp or dq == dp + 1):
        witness = {"reason": "degree-gap", "degrees": [p.degree, q.degree], "sign_flips": flips}
        return InterlacingCertificate(False, witness, wsign, isolations)
    witness = _interleaves(pp, qq, iso_p, iso_q)
    if witness is not None:
        witness["sign_flips"] = flips
        return InterlacingCertificate(False, witness, wsign, isolations)
    assert wsign in ("-", "0"), "interleaving verdict contradicts Wronskian sign %s" % wsign
    return InterlacingCertificate(True, None, wsign, isolations)


def _check_nonnegative(fs):
    for i, f in enumerate(fs):
        if any(c < 0 for c in f.coeffs):
            raise ValueError("polynomial %d has a negative coefficient" % i)


def is_interlacing_sequence(fs: Sequence[Polynomial]) -> bool:
    """True iff f_i < f_j for all i < j (nonnegative coefficients required)."""
    fs = list(fs)
    _check_nonnegative(fs)
    for i in range(len(fs)):
        for j in range(i + 1, len(fs)):
            if not interlaces(fs[i], fs[j]).verdict:
                return False
    return True


def interlacing_failure(fs: Sequence[Polynomial]) -> tuple[int, int] | None:
    """First pair (i, j) with f_i not < f_j, or None."""
    fs = list(fs)
    _check_nonnegative(fs)
    for i in range(len(fs)):
        for j in range(i + 1, len(fs)):
            if not interlaces(fs[i], fs[j]).verdict:
                return (i, j)
    return None


def consecutive_interlacing(fs: Sequence[Polynomial]) -> bool:
    """f_1 < f_2 < ... < f_m and f_1 < f_m; implies the full sequence
    property for real-rooted polynomials with positive leading coefficients."""
    fs = list(fs)
    if len(fs) < 2:
        return all(is_real_rooted(f) for f in fs)
    if not all(interlaces(a, b).verdict for a, b in zip(fs, fs[1:])):
        return False
    return interlaces(fs[0], fs[-1]).verdict


def reciprocal_doubled(fs: Sequence[Polynomial], n: int) -> list[Polynomial]:
    fs = list(fs)
    for f in fs:
        if f.degree is not None and f.degree > n:
            raise DegreeError("degree %d exceeds n=%d" % (f.degree, n))
    return fs + [reciprocal(f, n) for f in reversed(fs)]


def is_In_interlacing(fs: Sequence[Polynomial], n: int) -> bool:
    """f_1..f_m, I_n(f_m)..I_n(f_1) is an interlacing sequence."""
    return is_interlacing_sequence(reciprocal_doubled(fs, n))
