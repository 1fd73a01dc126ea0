"""Acceptance criteria, one test per criterion.

Each test records a single PASS/FAIL line (shown in the terminal summary
under "acceptance criteria" and printed to stdout) and asserts the stated
tolerance, including the wall-clock limits where one is given.
"""

import itertools
import random
import time
from contextlib import contextmanager

import pytest

from conftest import ACCEPTANCE_LINES
from chow.incidence import (zeta, chow_pair, aug_pair, chow_via_kernel, chow_via_chains, restrict,
                            augment, truncated_chow, characteristic)
from chow.ltmatrix import chow_family, pascal, gaussian, toeplitz
from chow.minors import is_tn, minor, gamma_chow
from chow.poly import ONE, ZERO, T, gamma_extract
from chow.poset import (boolean_algebra, chain, partition_lattice, subspace_lattice, paving_extension,
                        dual, is_weak_rank_uniform)
from chow.realroot import is_real_rooted, interlaces, is_In_interlacing
from chow.resolution import resolve, Resolution, dnk_family, gv_permutation_sum, from_lambda
from chow.ring import MPoly
from chow.toeplitz import chow_series, matrix_family, truncated_family_series, truncated_family_by_deletion
from chow.words import (eulerian, derangement_poly, q_eulerian, stable_descent_gamma, variables,
                        super_elementary, smirnov_H, qn_word_H)
from chow.generate import (random_weak_poset, random_scalar_g, random_tn_matrix, random_signed_matrix,
                           random_resolvable, random_series, paving_instances)

SEED = 20240611


@contextmanager
def criterion(num: int, title: str, limit: float | None = None):
    info = {"detail": ""}
    t0 = time.perf_counter()
    status = "FAIL"
    try:
        yield info
        elapsed = time.perf_counter() - t0
        if limit is not None:
            assert elapsed < limit, "took %.1fs, limit %.0fs" % (elapsed, limit)
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - t0
        status = info.get("status", status)
        bound = "" if limit is None else " / limit %.0fs" % limit
        detail = ("; " + info["detail"]) if info["detail"] else ""
        line = "criterion %2d: %s  %s (%.2fs%s%s)" % (num, status, title, elapsed, bound, detail)
        ACCEPTANCE_LINES.append(line)
        print(line)


def test_criterion_01_eulerian_derangement():
    with criterion(1, "boolean algebras vs excedance enumeration, n <= 6", 5) as info:
        for n in range(1, 7):
            P = boolean_algebra(n)
            b, top = P.bottom(), P.top()
            H, d = chow_pair(zeta(P), [b])
            assert H.get(b, top) == eulerian(n)
            assert d.get(b, top) == derangement_poly(n)
        info["detail"] = "n = 1..6 exact"


def test_criterion_02_triple_oracle():
    with criterion(2, "kernel = recursion = chain sum on 200 random weakly ranked posets", 60) as info:
        rng = random.Random(SEED)
        intervals = 0
        for _ in range(200):
            P = random_weak_poset(rng, max_size=12)
            g = random_scalar_g(rng, P)
            H, _ = chow_pair(g)
            K = chow_via_kernel(g)
            for x, y in P.pairs():
                h = H.get(x, y)
                assert K.get(x, y) == h
                assert chow_via_chains(g, x, y) == h
                intervals += 1
        info["detail"] = "%d intervals" % intervals


def _truncation_failures(P):
    g = zeta(P)
    H, d = chow_pair(g)
    G, A = aug_pair(g)
    bad = []
    for x, y in P.pairs():
        r = P.rho(x, y)
        if r < 2:
            continue
        Ht = truncated_chow(P, g, x, y)
        if d.get(x, y) != Ht.shift(1):
            bad.append(("d = tH(trunc)", x, y))
        if r >= 3:
            Ht2 = truncated_chow(P, g, x, y, times=2)
            extra = ZERO
            for z in P.interval(x, y):
                if P.rho(z, y) == 1:
                    extra = extra + truncated_chow(P, g, x, z) * g.get(z, y)
            if H.get(x, y) != Ht * (ONE + T) - Ht2.shift(1) + extra.shift(1):
                bad.append(("double truncation", x, y))
    b = P.bottom()
    for x in P.upset(b):
        Q = P.interval_poset(b, x)
        Qa, ga = augment(Q, restrict(g, Q))
        Ha, da = chow_pair(ga, [0])
        if Ha.get(0, Qa.top()) != G.get(b, x):
            bad.append(("G = H(aug)", b, x))
        if x != b and da.get(0, Qa.top()) != A.get(b, x):
            bad.append(("A = d(aug)", b, x))
    return bad


def _constructor_posets():
    out = [("boolean_algebra(%d)" % n, boolean_algebra(n)) for n in range(1, 6)]
    out += [("chain(%d)" % n, chain(n)) for n in range(1, 6)]
    out += [("partition_lattice(%d)" % n, partition_lattice(n)) for n in range(2, 7)]
    out += [("subspace_lattice(%d, 2)" % n, subspace_lattice(n, 2)) for n in range(1, 6)]
    out += [("subspace_lattice(%d, 3)" % n, subspace_lattice(n, 3)) for n in range(1, 5)]
    out += [("subspace_lattice(%d, 5)" % n, subspace_lattice(n, 5)) for n in range(1, 4)]
    hyper = [frozenset({1, 2, 3}), frozenset({1, 4}), frozenset({2, 4}), frozenset({3, 4})]
    out.append(("paving(boolean_algebra(4))", paving_extension(boolean_algebra(4), 1, hyper)))
    for n, d, H in paving_instances(random.Random(SEED), 4, max_n=5):
        out.append(("paving(boolean_algebra(%d), d=%d)" % (n, d), paving_extension(boolean_algebra(n), d, H)))
    return out


def test_criterion_03_truncation_augmentation():
    with criterion(3, "truncation, double truncation and augmentation identities") as info:
        posets = _constructor_posets()
        failures = {name: bad for name, P in posets if (bad := _truncation_failures(P))}
        assert not failures, failures
        info["detail"] = "%d constructor posets of rank <= 5, every interval" % len(posets)


def _uniform_agreement(P):
    verdict = is_weak_rank_uniform(P)
    if not verdict.uniform:
        return verdict
    F = chow_family(verdict.matrix)
    H, d, G, A = characteristic(P)
    b = P.bottom()
    for x in range(len(P)):
        n, lab = P.rho(b, x), P.labels[x]
        assert (H[lab], d[lab], G[lab], A[lab]) == (F.H[n], F.d[n], F.G[n], F.A[n]), lab
    return verdict


def test_criterion_04_matrix_poset_agreement():
    info = {"detail": ""}
    with criterion(4, "H_n[R(P)] = H at rank-n elements for uniform posets") as info:
        for n in range(1, 7):
            assert _uniform_agreement(boolean_algebra(n)).uniform
        for n, q in itertools.product(range(1, 5), (2, 3)):
            assert _uniform_agreement(subspace_lattice(n, q)).uniform
        # the dual partition lattices are the uniform ones; they must agree
        for n in range(2, 6):
            assert _uniform_agreement(dual(partition_lattice(n))).uniform
        premise = []
        for n in range(2, 6):
            v = _uniform_agreement(partition_lattice(n))
            if not v.uniform:
                premise.append("partition_lattice(%d) witness %s" % (n, v.witness))
        if premise:
            info["status"] = "FAIL"
            info["detail"] = ("boolean, subspace, dual partition lattices agree; premise false: "
                              "not weak-rank uniform: " + "; ".join(premise))
    if premise:
        pytest.xfail("partition lattices of rank >= 3 are not weak-rank uniform: " + "; ".join(premise))


def test_criterion_05_tn_real_rooted_interlacing():
    with criterion(5, "100 certified TN matrices: real roots, interlacing, I_n-interlacing", 300) as info:
        rng = random.Random(SEED)
        resolved = 0
        for i in range(100):
            N = 8 if i < 25 else rng.randint(1, 8)
            R = random_tn_matrix(rng, N)
            assert is_tn(R)
            F = chow_family(R)
            for fam in (F.H, F.d, F.G, F.A):
                assert all(is_real_rooted(p) for p in fam)
            for n in range(N + 1):
                assert interlaces(F.H[n], F.d[n]), (i, "H<d", n)
                assert interlaces(F.G[n], F.A[n]), (i, "G<A", n)
                if n < N:
                    for name, fam in (("H", F.H), ("d", F.d), ("G", F.G), ("A", F.A)):
                        assert interlaces(fam[n], fam[n + 1]), (i, name, n)
            res = resolve(R)
            assert isinstance(res, Resolution), "greedy resolution inconclusive on matrix %d" % i
            arr = dnk_family(R, res)
            for n in range(N + 1):
                assert is_In_interlacing(list(arr.d[n]), n)
                assert is_In_interlacing(list(arr.A[n]), n + 1)
            resolved += 1
        info["detail"] = "%d/100 with resolution certificates" % resolved


def test_criterion_06_gamma_formula():
    with criterion(6, "gamma from minors = gamma of H and G on 100 matrices") as info:
        P3 = pascal(3)
        assert gamma_chow(P3, 3).entries == (1, 2)
        assert gamma_chow(pascal(2), 2, augmented=True).entries == (1, 1)
        rng = random.Random(SEED)
        signed = 0
        for i in range(100):
            N = rng.randint(1, 8)
            if i % 2:
                R = random_signed_matrix(rng, N)
                signed += not is_tn(R)
            else:
                R = random_tn_matrix(rng, N)
            F = chow_family(R)
            for n in range(N + 1):
                if n:
                    assert gamma_chow(R, n) == gamma_extract(F.H[n], n - 1)
                assert gamma_chow(R, n, augmented=True) == gamma_extract(F.G[n], n)
        info["detail"] = "%d non-TN signed matrices included" % signed


def _gv_check(R, lam, N):
    for n in range(1, N + 1):
        for m in range(n):
            for S in itertools.combinations(range(1, n), m):
                assert minor(R, list(S) + [n], [0] + list(S)) == gv_permutation_sum(lam, n, S)


def test_criterion_07_gessel_viennot():
    with criterion(7, "minors = weighted permutation sums by descent set, n <= 7") as info:
        N = 7
        cases = [("pascal", pascal(N), [[1] * (n + 1) for n in range(N)])]
        for q in (2, 3):
            cases.append(("q=%d" % q, gaussian(N, q), [[q ** k for k in range(n + 1)] for n in range(N)]))
        (q,) = MPoly.gens("q")
        lam = [[q ** k for k in range(n + 1)] for n in range(5)]
        cases.append(("symbolic q", from_lambda(lam), lam))
        rng = random.Random(SEED)
        for i in range(6):
            R, lam = random_resolvable(rng, N)
            cases.append(("random %d" % i, R, lam))
        for name, R, lam in cases:
            res = resolve(R) if name != "symbolic q" else None
            if res is not None:
                assert isinstance(res, Resolution)
            _gv_check(R, lam, R.N)
        info["detail"] = "%d certified matrices" % len(cases)


def test_criterion_08_toeplitz_series():
    with criterion(8, "series formulas = matrix recursion; truncated forms = deletion") as info:
        rng = random.Random(SEED)
        for _ in range(100):
            f = random_series(rng, 10)
            assert chow_series(f).as_chow_family() == matrix_family(f)
        for _ in range(10):
            for k in (1, 2, 3):
                f = random_series(rng, 6 + k)
                assert truncated_family_series(f, k) == truncated_family_by_deletion(f, k)
        info["detail"] = "100 series to order 10; 30 truncated checks to n = 6"


def test_criterion_09_q_eulerian():
    with criterion(9, "Gaussian matrix: H_n = q^(maj-exc) sum, gamma = stable descent sum") as info:
        (q,) = MPoly.gens("q")
        R = gaussian(6, q)
        F = chow_family(R)
        for n in range(1, 7):
            assert F.H[n] == q_eulerian(n, q)
            assert gamma_chow(R, n).poly == stable_descent_gamma(n, q)
            assert gamma_chow(R, n, augmented=True).poly == stable_descent_gamma(n, q, augmented=True)
        info["detail"] = "symbolic q, n = 1..6"


def test_criterion_10_symmetric_functions():
    with criterion(10, "word enumerations = e(x/y) Toeplitz families; gamma monomial-nonnegative") as info:
        checked = 0
        for m_pos in range(0, 4):
            for m_neg in range(0, 3):
                if m_pos + m_neg == 0:
                    continue
                xs, ys = variables(m_pos, m_neg)
                R = toeplitz(super_elementary(5, xs, ys).coeffs, 5)
                F = chow_family(R)
                for n in range(1, 6):
                    assert qn_word_H(n, m_pos, m_neg, xs, ys) == F.H[n]
                    if m_neg == 0:
                        assert smirnov_H(n, m_pos, xs) == F.H[n]
                    for aug in (False, True):
                        for c in gamma_chow(R, n, augmented=aug).entries:
                            assert c == 0 or c.is_nonnegative()
                    checked += 1
        info["detail"] = "%d (variables, n) cases" % checked


def test_criterion_11_paving():
    with criterion(11, "paving extensions: d, H, A, G real-rooted", 120) as info:
        instances = paving_instances(random.Random(SEED), 24, max_n=6)
        for n, d, Hs in instances:
            P = paving_extension(boolean_algebra(n), d, Hs)
            assert P.is_graded()
            H, dd, G, A = characteristic(P)
            top = P.labels[P.top()]
            for poly_ in (dd[top], H[top], A[top], G[top]):
                assert is_real_rooted(poly_)
        info["detail"] = "%d instances, n <= 6" % len(instances)
