"""Minors, total nonnegativity and gamma vectors of Chow polynomials."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .ltmatrix import LTMatrix
from .poly import GammaVector
from .ring import is_rational

DEFAULT_TN_BOUND = 10


class SizeBoundError(ValueError):
    pass


def _det(R: LTMatrix, rows: tuple, cols: tuple, memo: dict):
    """Laplace expansion along the last row, memoized on (rows, cols)."""
    key = (rows, cols)
    if key in memo:
        return memo[key]
    k = len(rows)
    if k == 0:
        return 1
    if k == 1:
        return R[rows[0], cols[0]]
    # minors of a lower triangular matrix vanish if some row index is
    # smaller than the matching column index
    if any(r < c for r, c in zip(rows, cols)):
        memo[key] = 0
        return 0
    last = rows[-1]
    sub_rows = rows[:-1]
    total = 0
    for j, c in enumerate(cols):
        entry = R[last, c]
        if entry == 0:
            continue
        sign = 1 if (k - 1 + j) % 2 == 0 else -1
        sub = _det(R, sub_rows, cols[:j] + cols[j + 1:], memo)
        if sub == 0:
            continue
        total = total + sign * entry * sub
    memo[key] = total
    return total


def minor(R: LTMatrix, rows: Iterable[int], cols: Iterable[int], memo: dict | None = None):
    """det R[rows, cols] with rows and columns taken in increasing order."""
    rows = tuple(sorted(rows))
    cols = tuple(sorted(cols))
    if len(rows) != len(cols):
        raise ValueError("minor needs as many rows as columns (%d vs %d)" % (len(rows), len(cols)))
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise ValueError("repeated row or column index")
    if rows and (max(rows) > R.N or max(cols) > R.N or min(rows) < 0 or min(cols) < 0):
        raise IndexError("index outside 0..%d" % R.N)
    return _det(R, rows, cols, {} if memo is None else memo)


def dense_det(M: Sequence[Sequence]):
    """Determinant by cofactor expansion along the first row (test oracle)."""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j] == 0:
            continue
        sub = [row[:j] + row[j + 1:] for row in M[1:]]
        total = total + (-1) ** j * M[0][j] * dense_det(sub)
    return total


@dataclass
class TNVerdict:
    tn: bool
    witness: tuple | None = None  # (rows, cols) of the first negative minor
    value: object = None

    def __bool__(self):
        return self.tn


def is_tn(R: LTMatrix, bound: int = DEFAULT_TN_BOUND) -> TNVerdict:
    """Exhaustive check of every square minor (smallest violating minor first)."""
    if R.N > bound:
        raise SizeBoundError(
            "matrix size N=%d exceeds the exhaustive TN bound %d; verify a resolution instead" % (R.N, bound))
    for row in R.rows:
        for c in row:
            if not is_rational(c):
                raise TypeError("TN test needs rational entries")
    size = R.N + 1
    memo: dict = {}
    for k in range(1, size + 1):
        for rows in itertools.combinations(range(size), k):
            for cols in itertools.combinations(range(size), k):
                if any(r < c for r, c in zip(rows, cols)):
                    continue
                v = _det(R, rows, cols, memo)
                if v < 0:
                    return TNVerdict(False, (list(rows), list(cols)), v)
    return TNVerdict(True)


def initial_minors_positive(R: LTMatrix) -> bool:
    """Fast necessary check: all entries on or below the diagonal are >= 0."""
    return all(c >= 0 for row in R.rows for c in row)


# -- gamma vectors from minors -----------------------------------------------------------


def is_stable(S: Iterable[int]) -> bool:
    """No two consecutive integers."""
    s = sorted(S)
    return all(b - a > 1 for a, b in zip(s, s[1:]))


def alpha_set(R: LTMatrix, n: int, S: Iterable[int]):
    """prod r[s_i][s_{i-1}] along 0 = s_0 < s_1 < ... < s_m < s_{m+1} = n."""
    chain = [0] + sorted(S) + [n]
    out = 1
    for a, b in zip(chain, chain[1:]):
        out = out * R[b, a]
    return out


def beta_set(R: LTMatrix, n: int, S: Iterable[int]):
    """Inclusion-exclusion sum over T inside S of (-1)^{|S - T|} alpha(T)."""
    S = sorted(S)
    if any(s < 1 or s > n - 1 for s in S):
        raise ValueError("S must lie in [1, %d]" % (n - 1))
    total = 0
    for m in range(len(S) + 1):
        for T in itertools.combinations(S, m):
            sign = 1 if (len(S) - m) % 2 == 0 else -1
            total = total + sign * alpha_set(R, n, T)
    return total


def stable_sets(n: int, augmented: bool) -> list[tuple[int, ...]]:
    """Subsets S of [n-1] with S stable (augmented) or S + {0} stable."""
    lo = 1 if augmented else 2
    out = []
    pool = list(range(lo, n))
    for m in range(len(pool) + 1):
        for S in itertools.combinations(pool, m):
            if is_stable(S):
                out.append(S)
    return out


def gamma_chow(R: LTMatrix, n: int, augmented: bool = False) -> GammaVector:
    """Gamma vector of H_n (center (n-1)/2) or G_n (center n/2) from minors."""
    if not 0 <= n <= R.N:
        raise IndexError("n=%d outside 0..%d" % (n, R.N))
    if not augmented and n == 0:
        raise ValueError("H_0 = 1 has no gamma vector (n must be >= 1)")
    center = n if augmented else n - 1
    entries = [0] * (center // 2 + 1)
    memo: dict = {}
    for S in stable_sets(n, augmented):
        v = minor(R, list(S) + [n], [0] + list(S), memo)
        entries[len(S)] = entries[len(S)] + v
    return GammaVector(tuple(entries), center)
