"""Brute-force enumeration oracles: permutation statistics and word sums.

Everything here is deliberately naive so that it can serve as an independent
check on the recursions in ``ltmatrix`` and ``toeplitz``.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .poly import Polynomial, ZERO, one_plus_t_power
from .ring import MPoly
from .minors import is_stable, dense_det
from .toeplitz import TruncatedSeries

MAX_PERM_N = 8
MAX_WORD_N = 6


# -- permutation statistics (one-line notation on 1..n) -----------------------------


def exc(perm: Sequence[int]) -> int:
    return sum(1 for i, v in enumerate(perm, start=1) if v > i)


def descents(perm: Sequence[int]) -> list[int]:
    return [i for i in range(1, len(perm)) if perm[i - 1] > perm[i]]


def des(perm: Sequence[int]) -> int:
    return len(descents(perm))


def maj(perm: Sequence[int]) -> int:
    return sum(descents(perm))


def inv(perm: Sequence[int]) -> int:
    n = len(perm)
    return sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])


def is_derangement(perm: Sequence[int]) -> bool:
    return all(v != i for i, v in enumerate(perm, start=1))


def _perms(n: int):
    if n > MAX_PERM_N:
        raise ValueError("permutation enumeration limited to n <= %d" % MAX_PERM_N)
    return itertools.permutations(range(1, n + 1))


def eulerian(n: int) -> Polynomial:
    """sum over S_n of t^exc."""
    total = [0] * (n + 1)
    for p in _perms(n):
        total[exc(p)] += 1
    return Polynomial(total)


def derangement_poly(n: int) -> Polynomial:
    """sum over derangements of t^exc."""
    total = [0] * (n + 1)
    for p in _perms(n):
        if is_derangement(p):
            total[exc(p)] += 1
    return Polynomial(total)


def q_eulerian(n: int, q: MPoly) -> Polynomial:
    """sum over S_n of q^(maj - exc) t^exc."""
    coeffs = [0] * (n + 1)
    for p in _perms(n):
        e = exc(p)
        coeffs[e] = coeffs[e] + q ** (maj(p) - e)
    return Polynomial(coeffs)


def stable_descent_gamma(n: int, q, augmented: bool = False) -> Polynomial:
    """sum of t^des q^inv over sigma in S_n with D(sigma) stable
    (augmented) or D(sigma) + {0} stable (plain)."""
    coeffs = [0] * (n // 2 + 1)
    for p in _perms(n):
        D = descents(p)
        S = D if augmented else [0] + D
        if is_stable(S):
            coeffs[len(D)] = coeffs[len(D)] + q ** inv(p)
    return Polynomial(coeffs)


# -- symmetric function inputs --------------------------------------------------------


def variables(m_pos: int, m_neg: int = 0) -> tuple[tuple[MPoly, ...], tuple[MPoly, ...]]:
    names = ["x%d" % i for i in range(1, m_pos + 1)] + ["y%d" % i for i in range(1, m_neg + 1)]
    gens = MPoly.gens(*names)
    return gens[:m_pos], gens[m_pos:]


def super_elementary(N: int, xs: Sequence[MPoly], ys: Sequence[MPoly] = ()) -> TruncatedSeries:
    """a_k = e_k(x/y) = sum_i e_i(x) h_{k-i}(y), from prod (1 + x z) / (1 - y z)."""
    out = TruncatedSeries([1], N)
    for x in xs:
        out = out * TruncatedSeries([1, x], N)
    for y in ys:
        out = out * TruncatedSeries([y ** k for k in range(N + 1)])
    return out


def _weight(word, xs, ys):
    w = 1
    for a in word:
        w = w * (xs[a - 1] if a > 0 else ys[-a - 1])
    return w


def smirnov_H(n: int, m: int, xs: Sequence[MPoly] | None = None) -> Polynomial:
    """sum over Smirnov words of length n on 1..m of t^des prod x_w(i)."""
    if n > MAX_WORD_N or m > 4:
        raise ValueError("Smirnov enumeration limited to n <= %d, m <= 4" % MAX_WORD_N)
    if xs is None:
        xs, _ = variables(m)
    coeffs = [0] * max(n, 1)
    for w in itertools.product(range(1, m + 1), repeat=n):
        if any(w[i] == w[i + 1] for i in range(n - 1)):
            continue
        d = sum(1 for i in range(n - 1) if w[i] > w[i + 1])
        coeffs[d] = coeffs[d] + _weight(w, xs, ())
    return Polynomial(coeffs)


def qn_word_H(n: int, m_pos: int, m_neg: int, xs=None, ys=None) -> Polynomial:
    """sum over words on +-1.. where equal neighbours are negative of
    t^des (1+t)^col prod x_w(i), with x_{-i} = y_i."""
    if n > 5 or m_pos + m_neg > 5:
        raise ValueError("word enumeration limited to n <= 5 and at most 5 letters")
    if xs is None or ys is None:
        xs, ys = variables(m_pos, m_neg)
    alphabet = [-j for j in range(m_neg, 0, -1)] + list(range(1, m_pos + 1))
    total = ZERO
    for w in itertools.product(alphabet, repeat=n):
        col = 0
        ok = True
        for i in range(n - 1):
            if w[i] == w[i + 1]:
                if w[i] > 0:
                    ok = False
                    break
                col += 1
        if not ok:
            continue
        d = sum(1 for i in range(n - 1) if w[i] > w[i + 1])
        total = total + (one_plus_t_power(col) * _weight(w, xs, ys)).shift(d)
    return total


def jacobi_trudi_gamma(a: Sequence, n: int, augmented: bool = False) -> list:
    """gamma coefficients as sums over stable S of det(a_{r-c}) with rows
    S + {n} and columns {0} + S, each determinant by dense cofactor expansion."""
    lo = 1 if augmented else 2
    pool = list(range(lo, n))
    center = n if augmented else n - 1
    out = [0] * (center // 2 + 1)
    get = lambda m: a[m] if 0 <= m < len(a) else 0
    for size in range(len(pool) + 1):
        for S in itertools.combinations(pool, size):
            if not is_stable(S):
                continue
            rows = list(S) + [n]
            cols = [0] + list(S)
            M = [[get(r - c) for c in cols] for r in rows]
            out[size] = out[size] + dense_det(M)
    return out
