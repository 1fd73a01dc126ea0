"""Truncated power series and the Chow generating functions of Toeplitz matrices.

For ``f = sum a_n z^n`` with ``a_0 = 1`` and ``E = (f(tz) - t f(z)) / (1 - t)``
the families of the Toeplitz matrix ``(a_{n-k})`` are

    D = 1/E,  H = f D,  A = f(tz) D,  G = f(tz) f D.

Series may also be read in divided powers ``sum c_n z^n / B(n)``; products
then use the weights ``B(n) / (B(k) B(n-k))``, which keeps q-factorials exact
when q is a symbol.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .ltmatrix import LTMatrix, ChowFamily, chow_family, delete_index, toeplitz
from .poly import Polynomial
from .ring import exact_div, is_nonnegative, q_factorial

DEFAULT_ORDER = 10


class SeriesError(ValueError):
    pass


def _is_one(c) -> bool:
    return c == 1


class TruncatedSeries:
    """Coefficients c_0..c_N; ``binom(n, k)`` gives product weights (None = ordinary)."""

    __slots__ = ("coeffs", "binom")

    def __init__(self, coeffs: Sequence, N: int | None = None, binom: Callable | None = None):
        coeffs = list(coeffs)
        if N is None:
            N = len(coeffs) - 1
        if N < 0:
            raise SeriesError("order must be >= 0")
        coeffs = coeffs[: N + 1] + [0] * (N + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "binom", binom)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n] if 0 <= n <= self.N else 0

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "TruncatedSeries(%r)" % (list(self.coeffs),)

    def _like(self, coeffs) -> TruncatedSeries:
        return TruncatedSeries(coeffs, self.N, self.binom)

    def _check(self, other: TruncatedSeries):
        if other.N != self.N:
            raise SeriesError("order mismatch: %d vs %d" % (self.N, other.N))
        if other.binom is not self.binom:
            raise SeriesError("mixing ordinary and divided-power series")

    def __add__(self, other):
        self._check(other)
        return self._like([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return self._like([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> TruncatedSeries:
        """Multiply every coefficient by the constant c (on the right)."""
        return self._like([a * c for a in self.coeffs])

    def map(self, fn: Callable) -> TruncatedSeries:
        return self._like([fn(a) for a in self.coeffs])

    def _w(self, n, k):
        return 1 if self.binom is None else self.binom(n, k)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._check(other)
        out = []
        for n in range(self.N + 1):
            acc = 0
            for k in range(n + 1):
                a, b = self.coeffs[k], other.coeffs[n - k]
                if a == 0 or b == 0:
                    continue
                acc = acc + a * b * self._w(n, k)
            out.append(acc)
        return self._like(out)

    def invert(self) -> TruncatedSeries:
        """Inverse; the constant term must be 1."""
        if not _is_one(self.coeffs[0]):
            raise SeriesError("inversion needs constant term 1, got %r" % (self.coeffs[0],))
        out = [self.coeffs[0]]
        for n in range(1, self.N + 1):
            acc = 0
            for k in range(1, n + 1):
                a = self.coeffs[k]
                if a == 0:
                    continue
                acc = acc + a * out[n - k] * self._w(n, k)
            out.append(-acc)
        return self._like(out)

    def shift_index(self, k: int) -> TruncatedSeries:
        """f_k(z) = sum_j a_{k+j} z^j (ordinary series only)."""
        if self.binom is not None:
            raise SeriesError("index shift is only defined for ordinary series")
        return self._like([self[k + j] for j in range(self.N + 1)])

    def times_z(self) -> TruncatedSeries:
        if self.binom is not None:
            raise SeriesError("multiplication by z is only defined for ordinary series")
        return self._like([0] + list(self.coeffs[:-1]))


def series(coeffs: Sequence, N: int | None = None) -> TruncatedSeries:
    return TruncatedSeries(coeffs, N)


def geometric(N: int) -> TruncatedSeries:
    """1/(1 - z)."""
    return TruncatedSeries([1] * (N + 1))


# -- bivariate helpers -----------------------------------------------------------------


def lift(f: TruncatedSeries) -> TruncatedSeries:
    """Coefficients as constant polynomials in t."""
    return f.map(lambda c: c if isinstance(c, Polynomial) else Polynomial([c]))


def scale_t(f: TruncatedSeries) -> TruncatedSeries:
    """f(tz): coefficient n times t^n."""
    return f._like([(c if isinstance(c, Polynomial) else Polynomial([c])).shift(n)
                    for n, c in enumerate(f.coeffs)])


def _div_one_minus_t(f: TruncatedSeries) -> TruncatedSeries:
    """Divide each z-coefficient by (1 - t); a nonzero remainder is a bug."""
    return f.map(lambda p: -p.div_t_minus_1())


def _denominator(b: TruncatedSeries) -> TruncatedSeries:
    """(b(tz) - t b(z)) / (1 - t), constant term 1."""
    lb = lift(b)
    return _div_one_minus_t(scale_t(b) - lb.scale(Polynomial([0, 1])))


def _unit_check(f: TruncatedSeries):
    if f[0] != 1:
        raise SeriesError("a0 must be 1, got %r" % (f[0],))


@dataclass(frozen=True)
class SeriesFamily:
    """Coefficient lists of D, H, A, G (Polynomials in t)."""
    D: tuple
    H: tuple
    A: tuple
    G: tuple

    @property
    def N(self) -> int:
        return len(self.H) - 1

    def as_chow_family(self) -> ChowFamily:
        return ChowFamily(self.H, self.D, self.G, self.A)


def _family(D, H, A, G) -> SeriesFamily:
    as_poly = lambda S: tuple(lift(S).coeffs)
    return SeriesFamily(as_poly(D), as_poly(H), as_poly(A), as_poly(G))


def chow_series(f: TruncatedSeries) -> SeriesFamily:
    """D, H, A, G of the Toeplitz matrix of f (divided powers if f has weights)."""
    _unit_check(f)
    lf, ft = lift(f), scale_t(f)
    D = _denominator(f).invert()
    H = lf * D
    A = ft * D
    G = ft * H
    return _family(D, H, A, G)


def truncated_family_series(f: TruncatedSeries, k: int) -> SeriesFamily:
    """Families of R(n, k): the Toeplitz matrix with rows/columns n..n+k-1 removed,
    read at index n, as series in z.

    With D, H as above, d and H of R(n, k) are 1 + z t (f_{k+1}(z) - f_{k+1}(tz)) D/(1-t)
    and 1 + (f_k(z) - f_k(tz)) D/(1-t).  Entry n needs a_{n+k}, so f must carry
    k extra terms beyond the wanted order; the result has order f.N - k."""
    _unit_check(f)
    if f.binom is not None:
        raise SeriesError("truncated families need an ordinary series")
    if k < 1:
        raise SeriesError("k must be positive")
    if k > f.N:
        raise SeriesError("series of order %d is too short for k=%d" % (f.N, k))
    M = f.N - k
    g = TruncatedSeries(f.coeffs, M)
    t = Polynomial([0, 1])
    D = _denominator(g).invert()
    one = lift(TruncatedSeries([1], M))
    fk = lift(TruncatedSeries(f.shift_index(k).coeffs, M))
    fk1 = lift(TruncatedSeries(f.shift_index(k + 1).coeffs, M))
    gt = scale_t(g)
    Hq = _div_one_minus_t(fk - scale_t(fk)) * D
    dq = _div_one_minus_t(fk1 - scale_t(fk1)).times_z().scale(t) * D
    Afull = gt * D
    # G_n[R(n,k)] = sum_{j<n} a_{n+k-j} (t S_n + 1)(A_j) and A_n[R(n,k)] is the
    # same sum with t S_n alone; summing over n gives
    #   G = 1 + f_k(tz) - a_k + A(z) (f_k(z) - f_k(tz)) / (1 - t)
    #   A = G - A(z) (f_k(z) - a_k)
    ak = fk.coeffs[0]
    fk0 = fk - one.scale(ak)
    Gq = scale_t(fk) - one.scale(ak) + Afull * _div_one_minus_t(fk - scale_t(fk))
    Aq = Gq - Afull * fk0
    return _family(one + dq, one + Hq, one + Aq, one + Gq)


def truncated_family_by_deletion(f: TruncatedSeries, k: int) -> SeriesFamily:
    """Same quantities by deleting rows/columns and running the matrix recursion."""
    _unit_check(f)
    M = f.N - k
    out = {"D": [], "H": [], "A": [], "G": []}
    R = toeplitz(f.coeffs, f.N)
    for n in range(M + 1):
        S = R.truncated(n + k)
        for _ in range(k):
            S = delete_index(S, n)
        fam = chow_family(S, verify=False)
        out["D"].append(fam.d[n])
        out["H"].append(fam.H[n])
        out["A"].append(fam.A[n])
        out["G"].append(fam.G[n])
    return SeriesFamily(*(tuple(out[x]) for x in "DHAG"))


def matrix_family(f: TruncatedSeries) -> ChowFamily:
    return chow_family(toeplitz(f.coeffs, f.N))


# -- Polya frequency inputs --------------------------------------------------------------


@dataclass(frozen=True)
class PFData:
    gamma: object = 0
    alphas: tuple = ()
    betas: tuple = ()

    def __post_init__(self):
        for name, v in [("gamma", self.gamma)] + [("alpha", a) for a in self.alphas] + \
                [("beta", b) for b in self.betas]:
            if not is_nonnegative(v):
                raise SeriesError("%s parameter %r is negative" % (name, v))


def pf_series(p: PFData, N: int) -> TruncatedSeries:
    """e^{gamma z} prod (1 + alpha z) / (1 - beta z) to order N."""
    out = TruncatedSeries([Fraction(p.gamma) ** n / math.factorial(n) for n in range(N + 1)])
    for a in p.alphas:
        out = out * TruncatedSeries([1, a], N)
    for b in p.betas:
        out = out * TruncatedSeries([b ** n for n in range(N + 1)])
    return out


# -- binomial and Sheffer posets ------------------------------------------------------------


def _check_factorials(B: Sequence, name: str = "B"):
    for n, v in enumerate(B):
        if v == 0:
            raise SeriesError("zero factorial %s(%d)" % (name, n))


def divided_binomials(B: Sequence) -> Callable:
    """(n, k) -> B(n) / (B(k) B(n-k)), which must be exact."""
    B = list(B)
    cache: dict = {}

    def w(n, k):
        key = (n, k)
        if key not in cache:
            cache[key] = exact_div(B[n], B[k] * B[n - k])
        return cache[key]
    return w


def binomial_matrix(B: Sequence) -> LTMatrix:
    w = divided_binomials(B)
    return LTMatrix([[w(n, k) for k in range(n + 1)] for n in range(len(B))])


def binomial_series(B: Sequence) -> SeriesFamily:
    """Coefficients of sum X_n z^n / B(n); the returned entries are the X_n themselves."""
    B = list(B)
    if len(B) < 2 or B[0] != 1 or B[1] != 1:
        raise SeriesError("factorial function needs B(0) = B(1) = 1")
    _check_factorials(B)
    b = TruncatedSeries([1] * len(B), binom=divided_binomials(B))
    return chow_series(b)


def q_factorials(N: int, q) -> list:
    return [q_factorial(n, q) for n in range(N + 1)]


def sheffer_matrix(B: Sequence, C: Sequence) -> LTMatrix:
    """r[n][0] = 1 and r[n][k] = C(n) / (C(k) B(n-k)) for 0 < k <= n."""
    rows = []
    for n in range(len(C)):
        row = [1]
        for k in range(1, n + 1):
            row.append(exact_div(C[n], C[k] * B[n - k]))
        rows.append(row)
    return LTMatrix(rows)


def sheffer_series(B: Sequence, C: Sequence) -> SeriesFamily:
    """Families of a Sheffer poset via b(z) = sum z^n/B(n), c(z) = sum z^n/C(n).

    With den = b(tz) - t b(z):
        sum d_n z^n/C(n) = 1 + ((1 - t) - (c(tz) - t c(z))) / den
        sum H_n z^n/C(n) = (c(z) b(tz) - c(tz) b(z)) / den + (1 - t) b(z) / den
        sum A_n z^n/C(n) = 1 + t (c(z) - c(tz)) / den
        sum G_n z^n/C(n) = (c(z) b(tz) - t c(tz) b(z)) / den
    Returned coefficients are the d_n, H_n, A_n, G_n (rescaled by C(n)).
    Rational factorial values only.
    """
    B, C = list(B), list(C)
    if len(B) != len(C):
        raise SeriesError("B and C need the same length")
    if B[0] != 1 or (len(B) > 1 and B[1] != 1) or (len(C) > 1 and C[1] != 1):
        raise SeriesError("need B(0) = B(1) = 1 and C(1) = 1")
    _check_factorials(B, "B")
    _check_factorials(C[1:], "C")
    N = len(B) - 1
    t = Polynomial([0, 1])
    # C(0) plays no role: the n = 0 entries are all 1
    b = lift(TruncatedSeries([Fraction(1, x) for x in B]))
    c = lift(TruncatedSeries([Fraction(1)] + [Fraction(1, x) for x in C[1:]]))
    bt, ct = scale_t(b), scale_t(c)
    Einv = _denominator(TruncatedSeries(b.coeffs)).invert()
    one = lift(TruncatedSeries([1], N))
    ratio = lambda num: _div_one_minus_t(num) * Einv
    D = one + Einv - ratio(ct - c.scale(t))
    H = ratio(c * bt - ct * b) + b * Einv
    A = one + ratio((c - ct).scale(t))
    G = ratio(c * bt - (ct * b).scale(t))
    scale = [1] + [C[n] for n in range(1, N + 1)]
    rescale = lambda S: tuple(p * scale[n] for n, p in enumerate(lift(S).coeffs))
    return SeriesFamily(rescale(D), rescale(H), rescale(A), rescale(G))


def cubical_factorials(N: int, r: int) -> tuple[list, list]:
    B = [math.factorial(n) for n in range(N + 1)]
    C = [1] + [r ** (n - 1) * math.factorial(n - 1) for n in range(1, N + 1)]
    return B, C


def affine_factorials(N: int, q: int) -> tuple[list, list]:
    B = q_factorials(N, q)
    C = [1] + [q ** (n - 1) * q_factorial(n - 1, q) for n in range(1, N + 1)]
    return B, C


def shifted_sheffer_check(B: Sequence, C: Sequence, r, order: int = 2) -> list:
    """Low-order coefficients of sum H_{n+1} z^n / (r^n B(n)) computed from the
    closed form (b(z/r) b(tz) - t b(tz/r) b(z)) / (b(tz) - t b(z)); returns the
    polynomials for n < order, to be compared with H_{n+1} / (r^n B(n))."""
    N = order
    t = Polynomial([0, 1])
    b = lift(TruncatedSeries([Fraction(1, x) for x in B[: N + 1]]))
    br = lift(TruncatedSeries([Fraction(1, x) / Fraction(r) ** n for n, x in enumerate(B[: N + 1])]))
    Einv = _denominator(TruncatedSeries(b.coeffs)).invert()
    num = br * scale_t(b) - (scale_t(br) * b).scale(t)
    return list((_div_one_minus_t(num) * Einv).coeffs[:order])
