"""Resolutions of unit lower-triangular matrices.

A resolution is an array ``lam[n][k]`` (0 <= k <= n < N) of nonnegative
numbers together with monic polynomials ``R[n][k]`` such that
``R[n][n] = t^n``, ``R[n+1][k] = R[n+1][k+1] + lam[n][k] R[n][k]`` and
``R[n][0]`` is the row polynomial of the matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .ltmatrix import LTMatrix, ChowFamily, chow_family, _apply
from .poly import Polynomial, ONE, ZERO, s_op, gamma_extract
from .ring import exact_div, is_nonnegative


@dataclass(frozen=True)
class Resolution:
    lam: tuple          # lam[n] has n + 1 entries, n = 0..N-1
    resolved: tuple     # resolved[n] has n + 1 polynomials, n = 0..N

    @property
    def N(self) -> int:
        return len(self.resolved) - 1

    def __bool__(self):
        return True


@dataclass(frozen=True)
class ResolutionFailure:
    condition: str
    n: int
    k: int | None = None

    def __bool__(self):
        return False


INCONCLUSIVE = "inconclusive"


def build_resolved(lam: Sequence[Sequence], N: int) -> list[list[Polynomial]]:
    """R[n][k] from lam via R[n+1][k] = R[n+1][k+1] + lam[n][k] R[n][k]."""
    res = [[ONE]]
    for n in range(N):
        row = [None] * (n + 2)
        row[n + 1] = ONE.shift(n + 1)
        for k in range(n, -1, -1):
            row[k] = row[k + 1] + res[n][k] * lam[n][k]
        res.append(row)
    return res


def _check_lam_shape(lam, N):
    if len(lam) < N:
        raise ValueError("lambda array needs %d rows, got %d" % (N, len(lam)))
    for n in range(N):
        if len(lam[n]) != n + 1:
            raise ValueError("lambda row %d needs %d entries" % (n, n + 1))
        for k, v in enumerate(lam[n]):
            if not is_nonnegative(v):
                raise ValueError("lambda[%d][%d] = %r is negative" % (n, k, v))


def verify_resolution(R: LTMatrix, lam: Sequence[Sequence]) -> Resolution | ResolutionFailure:
    N = R.N
    _check_lam_shape(lam, N)
    lam = tuple(tuple(lam[n]) for n in range(N))
    res = build_resolved(lam, N)
    for n in range(N + 1):
        if res[n][n] != ONE.shift(n):
            return ResolutionFailure("R[n][n] = t^n", n, n)
        for k in range(n + 1):
            low = res[n][k].low_degree()
            if low is not None and low < k:
                return ResolutionFailure("t^k divides R[n][k]", n, k)
            if res[n][k].leading() != 1:
                return ResolutionFailure("R[n][k] monic", n, k)
        if res[n][0] != R.row_poly(n):
            return ResolutionFailure("R[n][0] equals row %d polynomial" % n, n, 0)
    return Resolution(lam, tuple(tuple(r) for r in res))


def resolve(R: LTMatrix) -> Resolution | str:
    """Greedy resolution: solve row by row for lam[n][*].

    Row n+1 satisfies R_{n+1} - t^{n+1} = sum_j lam[n][j] R[n][j]; since
    t^j divides R[n][j] the system is triangular in the coefficients.  A
    zero pivot with nonzero residual, a negative value, or a non-exact
    division yields ``"inconclusive"``.
    """
    N = R.N
    lam = []
    res = [[ONE]]
    for n in range(N):
        target = R.row_poly(n + 1) - ONE.shift(n + 1)
        row_lam = []
        for i in range(n + 1):
            resid = target[i]
            for j, lj in enumerate(row_lam):
                resid = resid - lj * res[n][j][i]
            pivot = res[n][i][i]
            if pivot == 0:
                if resid != 0:
                    return INCONCLUSIVE
                value = 0
            else:
                try:
                    value = exact_div(resid, pivot)
                except ArithmeticError:
                    return INCONCLUSIVE
            if not is_nonnegative(value):
                return INCONCLUSIVE
            row_lam.append(value)
        lam.append(row_lam)
        row = [None] * (n + 2)
        row[n + 1] = ONE.shift(n + 1)
        for k in range(n, -1, -1):
            row[k] = row[k + 1] + res[n][k] * row_lam[k]
        res.append(row)
    out = verify_resolution(R, lam)
    return out if out else INCONCLUSIVE


def from_lambda(lam: Sequence[Sequence]) -> LTMatrix:
    """The matrix whose rows are R[n][0] for the ladder built from lam."""
    N = len(lam)
    res = build_resolved(lam, N)
    return LTMatrix([[res[n][0][k] for k in range(n + 1)] for n in range(N + 1)])


# -- d_{n,k} and A_{n,k} ----------------------------------------------------------------


@dataclass(frozen=True)
class DnkArrays:
    d: tuple  # d[n][k] = D(R[n][k])
    A: tuple  # A[n][k] = A(R[n][k])


def dnk_direct(R: LTMatrix, res: Resolution, family: ChowFamily | None = None) -> DnkArrays:
    family = family or chow_family(R, verify=False)
    d = tuple(tuple(_apply(family.d, p) for p in row) for row in res.resolved)
    A = tuple(tuple(_apply(family.A, p) for p in row) for row in res.resolved)
    return DnkArrays(d, A)


def dnk_recursive(res: Resolution) -> DnkArrays:
    """d[n+1][k] = t S_n(sum_j lam d[n][j]) + sum_{j>=k} lam d[n][j]; A with S_{n+1}."""
    d = [[ONE]]
    A = [[ONE]]
    for n in range(res.N):
        lam = res.lam[n]
        for arr, op_n in ((d, n), (A, n + 1)):
            terms = [arr[n][j] * lam[j] for j in range(n + 1)]
            base = s_op(sum(terms, ZERO), op_n).shift(1)
            row = []
            tail = ZERO
            tails = [ZERO] * (n + 2)
            for j in range(n, -1, -1):
                tail = tail + terms[j]
                tails[j] = tail
            for k in range(n + 2):
                row.append(base + tails[k])
            arr.append(row)
    return DnkArrays(tuple(map(tuple, d)), tuple(map(tuple, A)))


def dnk_family(R: LTMatrix, res: Resolution) -> DnkArrays:
    """Both routes, asserted equal."""
    direct = dnk_direct(R, res)
    rec = dnk_recursive(res)
    assert direct == rec, "d_{n,k}/A_{n,k} routes disagree"
    return direct


def lift_interlacing(fs: Sequence[Polynomial], n: int) -> list[Polynomial]:
    """g_k = t S_n(f_0 + ... + f_m) + sum_{j>=k} f_j for k = 0..m+1."""
    fs = list(fs)
    base = s_op(sum(fs, ZERO), n).shift(1)
    out = []
    for k in range(len(fs) + 1):
        out.append(base + sum(fs[k:], ZERO))
    return out


# -- sigma / tau -------------------------------------------------------------------------


def _gamma(f: Polynomial, center2: int) -> Polynomial:
    if center2 < 0:
        assert f.is_zero()
        return ZERO
    return gamma_extract(f, center2).poly


@dataclass(frozen=True)
class SigmaTau:
    sigma: tuple  # sigma[n][k] as gamma polynomials
    tau: tuple


def sigma_tau_direct(dnk: DnkArrays) -> SigmaTau:
    sigma, tau = [], []
    for n, row in enumerate(dnk.d):
        sigma.append(tuple(_gamma(s_op(f, n), n - 1) for f in row))
        tau.append(tuple(_gamma(s_op(f, n + 1), n) for f in row))
    return SigmaTau(tuple(sigma), tuple(tau))


def sigma_tau_recursive(res: Resolution) -> SigmaTau:
    sigma = [(ZERO,)]
    tau = [(ONE,)]
    for n in range(res.N):
        lam = res.lam[n]
        ls = [sigma[n][j] * lam[j] for j in range(n + 1)]
        lt = [tau[n][j] * lam[j] for j in range(n + 1)]
        srow, trow = [], []
        for k in range(n + 2):
            tail = sum(lt[k:], ZERO)
            srow.append(tail)
            trow.append(sum(ls[:k], ZERO).shift(1) + tail)
        sigma.append(tuple(srow))
        tau.append(tuple(trow))
    return SigmaTau(tuple(sigma), tuple(tau))


def sigma_tau(R: LTMatrix, res: Resolution, n: int | None = None) -> SigmaTau:
    """sigma[n][k] = gamma(S_n(d_{n,k})), tau[n][k] = gamma(S_{n+1}(d_{n,k})),
    computed directly and by recursion (asserted equal), up to row n."""
    direct = sigma_tau_direct(dnk_family(R, res))
    rec = sigma_tau_recursive(res)
    assert direct == rec, "sigma/tau routes disagree"
    if n is None:
        return direct
    return SigmaTau(direct.sigma[: n + 1], direct.tau[: n + 1])


# -- Gessel-Viennot ----------------------------------------------------------------------

GV_MAX_N = 8


def descent_set(perm: Sequence[int]) -> frozenset:
    return frozenset(i + 1 for i in range(len(perm) - 1) if perm[i] > perm[i + 1])


def inversion_profile(perm: Sequence[int]) -> list[int]:
    """f(j) = #{i < j : perm(i) > perm(j)}, for j = 1..n."""
    return [sum(1 for i in range(j) if perm[i] > perm[j]) for j in range(len(perm))]


def gv_weight(lam: Sequence[Sequence], perm: Sequence[int]):
    out = 1
    for i, f in enumerate(inversion_profile(perm), start=1):
        out = out * lam[i - 1][f]
    return out


def gv_permutation_sum(res: Resolution | Sequence[Sequence], n: int, S) -> object:
    """Sum over permutations with descent set S of prod lam[i-1][f(i)]."""
    if n > GV_MAX_N:
        raise ValueError("permutation enumeration limited to n <= %d" % GV_MAX_N)
    lam = res.lam if isinstance(res, Resolution) else res
    S = frozenset(S)
    total = 0
    for perm in itertools.permutations(range(1, n + 1)):
        if descent_set(perm) == S:
            total = total + gv_weight(lam, perm)
    return total
