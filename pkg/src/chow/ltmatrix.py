"""Lower-triangular unit-diagonal matrices and their Chow families.

For ``R = (r[n][k])`` with ``r[n][n] = 1`` the four families are defined by

    d_0 = 1,  d_n = t S_{n-1}(sum_{k<n} r[n][k] d_k),  H_n = sum_k r[n][k] d_k
    A_0 = 1,  A_n = t S_n(sum_{k<n} r[n][k] A_k),      G_n = sum_k r[n][k] A_k
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

from .poly import Polynomial, ONE, ZERO, T, reciprocal, s_op, t_integer, is_palindromic
from .ring import exact_div, gaussian_binomial
from math import comb


class DiagonalError(ValueError):
    """A matrix passed as unit lower triangular has a diagonal entry != 1."""


class LTMatrix:
    """Rows ``r[0..N]`` with ``len(r[n]) == n + 1`` and ``r[n][n] == 1``."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(r) for r in rows)
        for n, row in enumerate(rows):
            if len(row) != n + 1:
                raise ValueError("row %d must have %d entries, got %d" % (n, n + 1, len(row)))
            if row[n] != 1:
                raise DiagonalError("diagonal entry r[%d][%d] = %r is not 1" % (n, n, row[n]))
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("LTMatrix is immutable")

    @property
    def N(self) -> int:
        return len(self.rows) - 1

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, nk):
        n, k = nk
        if k > n:
            return 0
        return self.rows[n][k]

    def __eq__(self, other):
        return isinstance(other, LTMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "LTMatrix(%r)" % (list(map(list, self.rows)),)

    def row_poly(self, n: int) -> Polynomial:
        """R_n(t) = sum_k r[n][k] t^k."""
        return Polynomial(self.rows[n])

    def truncated(self, N: int) -> LTMatrix:
        return LTMatrix(self.rows[: N + 1])

    def map(self, f: Callable) -> LTMatrix:
        return LTMatrix([[f(c) if k < n else 1 for k, c in enumerate(row)] for n, row in enumerate(self.rows)])

    def dense(self) -> list[list]:
        size = len(self.rows)
        return [[self[n, k] for k in range(size)] for n in range(size)]

    def matmul(self, other: LTMatrix) -> LTMatrix:
        if len(self) != len(other):
            raise ValueError("size mismatch")
        out = []
        for n in range(len(self)):
            row = []
            for k in range(n + 1):
                acc = 0
                for j in range(k, n + 1):
                    acc = acc + self[n, j] * other[j, k]
                row.append(acc)
            out.append(row)
        return LTMatrix(out)


# -- standard matrices -----------------------------------------------------------


def identity(N: int) -> LTMatrix:
    return LTMatrix([[1 if k == n else 0 for k in range(n + 1)] for n in range(N + 1)])


def pascal(N: int) -> LTMatrix:
    return LTMatrix([[comb(n, k) for k in range(n + 1)] for n in range(N + 1)])


def toeplitz(a: Sequence, N: int | None = None) -> LTMatrix:
    """r[n][k] = a[n-k]; requires a[0] == 1.  Missing terms are 0."""
    a = list(a)
    if N is None:
        N = len(a) - 1
    get = lambda m: a[m] if m < len(a) else 0
    return LTMatrix([[get(n - k) for k in range(n + 1)] for n in range(N + 1)])


def gaussian(N: int, q) -> LTMatrix:
    """Gaussian binomial coefficients [n choose k]_q."""
    return LTMatrix([[gaussian_binomial(n, k, q) for k in range(n + 1)] for n in range(N + 1)])


# -- Chow families ----------------------------------------------------------------


@dataclass(frozen=True)
class ChowFamily:
    H: tuple
    d: tuple
    G: tuple
    A: tuple

    def violations(self, R: LTMatrix) -> list[str]:
        """Conditions of the defining corollaries that fail (empty if none)."""
        bad = []
        N = R.N
        if self.d[0] != ONE:
            bad.append("d0=1")
        if self.A[0] != ONE:
            bad.append("A0=1")
        for n in range(N + 1):
            if n >= 1 and reciprocal(self.H[n], n) != T * self.H[n]:
                bad.append("I_n(H_n)=tH_n at n=%d" % n)
            if not is_palindromic(self.d[n], n):
                bad.append("I_n(d_n)=d_n at n=%d" % n)
            if not is_palindromic(self.G[n], n):
                bad.append("I_n(G_n)=G_n at n=%d" % n)
            if n >= 1 and reciprocal(self.A[n], n) * T != self.A[n]:
                bad.append("I_n(A_n)=A_n/t at n=%d" % n)
            if sum((self.d[k] * R[n, k] for k in range(n + 1)), ZERO) != self.H[n]:
                bad.append("H_n=sum r d at n=%d" % n)
            if sum((self.A[k] * R[n, k] for k in range(n + 1)), ZERO) != self.G[n]:
                bad.append("G_n=sum r A at n=%d" % n)
        return bad

    def verify(self, R: LTMatrix) -> None:
        bad = self.violations(R)
        assert not bad, "Chow family conditions violated: %s" % ", ".join(bad)


def _family(R: LTMatrix, offset: int) -> tuple[list, list]:
    e, f = [ONE], [ONE]
    for n in range(1, R.N + 1):
        acc = ZERO
        for k in range(n):
            if R[n, k] != 0:
                acc = acc + e[k] * R[n, k]
        new = s_op(acc, n + offset).shift(1)
        e.append(new)
        f.append(acc + new)
    return f, e


def chow_family(R: LTMatrix, verify: bool = True) -> ChowFamily:
    H, d = _family(R, -1)
    G, A = _family(R, 0)
    fam = ChowFamily(tuple(H), tuple(d), tuple(G), tuple(A))
    if verify:
        fam.verify(R)
    return fam


def chow_via_subsets(R: LTMatrix, n: int) -> Polynomial:
    """H_n as a sum over subsets S of [n] (2^n terms)."""
    if n == 0:
        return ONE
    total = ZERO
    for m in range(n + 1):
        for S in itertools.combinations(range(1, n + 1), m):
            chain = (0,) + S
            alpha = 1
            for a, b in zip(chain, chain[1:] + (n,)):
                alpha = alpha * R[b, a]
            if alpha == 0:
                continue
            term = Polynomial([alpha]).shift(m)
            for a, b in zip(chain, chain[1:]):
                term = term * t_integer(b - a - 1)
            total = total + term
    return total


def chow_via_subsets_alt(R: LTMatrix, n: int) -> Polynomial:
    """Second subset form: S inside [n-1] with the factor [n - s_m]_t."""
    if n == 0:
        return ONE
    total = ZERO
    for m in range(n):
        for S in itertools.combinations(range(1, n), m):
            chain = (0,) + S
            alpha = 1
            for a, b in zip(chain, chain[1:] + (n,)):
                alpha = alpha * R[b, a]
            if alpha == 0:
                continue
            term = Polynomial([alpha]).shift(m) * t_integer(n - chain[-1])
            for a, b in zip(chain, chain[1:]):
                term = term * t_integer(b - a - 1)
            total = total + term
    return total


# -- structural operations ------------------------------------------------------------


def delete_index(R: LTMatrix, n: int) -> LTMatrix:
    """Remove row and column n; remaining indices are renumbered."""
    if not 0 <= n <= R.N:
        raise IndexError("index %d out of range 0..%d" % (n, R.N))
    keep = [i for i in range(R.N + 1) if i != n]
    return LTMatrix([[R[i, j] for j in keep[: a + 1]] for a, i in enumerate(keep)])


def augment_matrix(R: LTMatrix) -> LTMatrix:
    """New initial row [1, 0, ...] and new initial column [1, r00, r10, r20, ...]."""
    rows = [[1]]
    for n in range(R.N + 1):
        rows.append([R[n, 0]] + list(R.rows[n]))
    return LTMatrix(rows)


def conjugate_scale(R: LTMatrix, c: Sequence) -> LTMatrix:
    """R' = (r[n][k] c_n / c_k); requires c_0 = 1 and c_n != 0."""
    c = list(c)
    if len(c) < R.N + 1:
        raise ValueError("need %d scale factors" % (R.N + 1))
    if c[0] != 1:
        raise ValueError("scale factor c_0 must be 1")
    if any(x == 0 for x in c):
        raise ZeroDivisionError("zero scale factor")
    return LTMatrix([[1 if k == n else exact_div(R[n, k] * c[n], c[k]) for k in range(n + 1)]
                     for n in range(R.N + 1)])


def chow_family_by_deletion(R: LTMatrix) -> ChowFamily:
    """All four families via the deletion/augmentation identities:
    d_n = t H_{n-1}[del_{n-1} R] (n > 1), G_n = H_{n+1}[Rbar],
    A_n = t H_n[del_n Rbar] (n >= 1)."""
    N = R.N
    d = [ONE] + ([ZERO] if N >= 1 else [])
    for n in range(2, N + 1):
        sub = delete_index(R, n - 1).truncated(n - 1)
        d.append(chow_family(sub, verify=False).H[n - 1].shift(1))
    H = [sum((d[k] * R[n, k] for k in range(n + 1)), ZERO) for n in range(N + 1)]
    Rbar = augment_matrix(R)
    G = list(chow_family(Rbar, verify=False).H[1:])
    A = [ONE]
    for n in range(1, N + 1):
        sub = delete_index(Rbar, n).truncated(n)
        A.append(chow_family(sub, verify=False).H[n].shift(1))
    return ChowFamily(tuple(H), tuple(d), tuple(G), tuple(A))


# -- deranged and Eulerian maps -------------------------------------------------------------


def _apply(basis: Sequence[Polynomial], f: Polynomial) -> Polynomial:
    if f.degree is not None and f.degree >= len(basis):
        raise ValueError("degree %d exceeds matrix size %d" % (f.degree, len(basis) - 1))
    total = ZERO
    for k, c in enumerate(f.coeffs):
        if c != 0:
            total = total + basis[k] * c
    return total


def apply_deranged(R: LTMatrix, f: Polynomial, family: ChowFamily | None = None) -> Polynomial:
    """Linear map t^n -> d_n."""
    family = family or chow_family(R, verify=False)
    return _apply(family.d, f)


def apply_eulerian(R: LTMatrix, f: Polynomial, family: ChowFamily | None = None) -> Polynomial:
    """Linear map t^n -> A_n."""
    family = family or chow_family(R, verify=False)
    return _apply(family.A, f)
