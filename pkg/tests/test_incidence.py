import random

import pytest
from hypothesis import given, settings, strategies as st

from chow.poly import poly, ONE, T
from chow.poset import boolean_algebra, chain, truncate, partition_lattice, subspace_lattice
from chow.incidence import (IncidenceFunction, KLSError, delta, zeta, convolve, invert,
                            kernel_from_g, reciprocal_function, chow_via_kernel, chow_pair, aug_pair,
                            chow_via_chains, chow_via_chains_general, chow_conditions,
                            aug_conditions, augment, chow_polynomial, restrict,
                            truncated_chow)
from chow.generate import random_weak_poset, random_scalar_g, random_kls_g

seeds = st.integers(0, 10 ** 6)


def _bt(P):
    return P.bottom(), P.top()


def test_convolution_laws():
    C = chain(3)
    z = zeta(C)
    assert convolve(delta(C), z) == z
    b, t = _bt(C)
    assert convolve(z, z).get(b, t) == poly(4)
    B2 = boolean_algebra(2)
    zz = zeta(B2)
    assert convolve(invert(zz), zz).agrees_with(delta(B2))


def test_mobius_values():
    B2 = boolean_algebra(2)
    b, t = _bt(B2)
    assert invert(zeta(B2)).get(b, t) == ONE
    assert invert(delta(B2)) == delta(B2)


def test_kernel_examples():
    B2 = boolean_algebra(2)
    b, t = _bt(B2)
    assert kernel_from_g(zeta(B2)).get(b, t) == poly(1, -2, 1)
    C = chain(2)
    b, t = _bt(C)
    assert kernel_from_g(zeta(C)).get(b, t) == poly(0, -1, 1)
    kappa = kernel_from_g(random_kls_g(random.Random(3), boolean_algebra(3)))
    assert all(kappa.get(x, x) == ONE for x in range(8))


def test_kernel_is_a_p_kernel():
    P = boolean_algebra(3)
    kappa = kernel_from_g(zeta(P))
    assert convolve(kappa, reciprocal_function(kappa)).agrees_with(delta(P))


def test_boolean_chow_values():
    B3 = boolean_algebra(3)
    b, t = _bt(B3)
    H, d = chow_pair(zeta(B3))
    assert H.get(b, t) == poly(1, 4, 1)
    assert d.get(b, t) == poly(0, 1, 1)
    B2 = boolean_algebra(2)
    b, t = _bt(B2)
    H, d = chow_pair(zeta(B2))
    assert (H.get(b, t), d.get(b, t)) == (poly(1, 1), poly(0, 1))
    C = chain(2)
    H, _ = chow_pair(zeta(C))
    assert H.get(*_bt(C)) == poly(1, 1)


def test_rank_one_interval():
    C = chain(1)
    H, _ = chow_pair(zeta(C))
    G, A = aug_pair(zeta(C))
    assert H.get(*_bt(C)) == ONE
    assert G.get(*_bt(C)) == poly(1, 1) and A.get(*_bt(C)) == T


def test_augmented_values():
    B2 = boolean_algebra(2)
    G, A = aug_pair(zeta(B2))
    assert G.get(*_bt(B2)) == poly(1, 3, 1)


def test_chain_sum_examples():
    B2 = boolean_algebra(2)
    assert chow_via_chains(zeta(B2), *_bt(B2)) == poly(1, 1)
    P = boolean_algebra(3)
    for x, y in P.covers():
        assert chow_via_chains(zeta(P), x, y) == ONE


def test_truncation_example():
    assert chow_polynomial(truncate(boolean_algebra(3))) == poly(1, 1)


def test_augmentation_example():
    P = boolean_algebra(2)
    Q, gbar = augment(P, zeta(P))
    G, _ = aug_pair(zeta(P))
    H, _ = chow_pair(gbar)
    assert H.get(0, Q.top()) == G.get(*_bt(P))
    assert gbar.get(0, Q.top()) == zeta(P).get(*_bt(P))


def test_kls_violation_rejected():
    P = chain(2)
    b, t = _bt(P)
    vals = dict(zeta(P).values)
    vals[(b, t)] = poly(1, 1)
    with pytest.raises(KLSError):
        chow_pair(IncidenceFunction(P, vals))
    vals = dict(zeta(P).values)
    vals[(b, b)] = poly(2)
    with pytest.raises(KLSError):
        kernel_from_g(IncidenceFunction(P, vals))


def test_chain_sum_rejects_polynomial_g():
    P = boolean_algebra(3)
    g = random_kls_g(random.Random(1), P)
    if not g.is_scalar():
        with pytest.raises(KLSError):
            chow_via_chains(g, *_bt(P))


def test_conditions_detect_perturbation():
    P = boolean_algebra(3)
    g = zeta(P)
    H, d = chow_pair(g)
    assert chow_conditions(H, d, g) == []
    vals = dict(d.values)
    vals[_bt(P)] = vals[_bt(P)] + T
    assert chow_conditions(H, IncidenceFunction(P, vals), g)
    G, A = aug_pair(g)
    assert aug_conditions(G, A, g) == []
    vals = dict(G.values)
    vals[_bt(P)] = vals[_bt(P)] + ONE
    assert aug_conditions(IncidenceFunction(P, vals), A, g)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_three_routes_agree(seed):
    rng = random.Random(seed)
    P = random_weak_poset(rng, max_size=10)
    g = random_scalar_g(rng, P)
    H, d = chow_pair(g)
    K = chow_via_kernel(g)
    for x, y in P.pairs():
        assert K.get(x, y) == H.get(x, y)
        assert chow_via_chains(g, x, y) == H.get(x, y)
    assert chow_conditions(H, d, g) == []


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_polynomial_g_routes_agree(seed):
    rng = random.Random(seed)
    P = random_weak_poset(rng, max_size=9)
    g = random_kls_g(rng, P)
    H, d = chow_pair(g)
    K = chow_via_kernel(g)
    b, t = _bt(P)
    assert K.get(b, t) == H.get(b, t)
    assert chow_via_chains_general(g, b, t) == H.get(b, t)
    assert chow_conditions(H, d, g) == []


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_augmented_identities(seed):
    rng = random.Random(seed)
    P = random_weak_poset(rng, max_size=9)
    g = random_kls_g(rng, P)
    H, _ = chow_pair(g)
    G, A = aug_pair(g)
    assert convolve(reciprocal_function(g), H).agrees_with(G)
    assert aug_conditions(G, A, g) == []
    Q, gbar = augment(P, g)
    Ha, da = chow_pair(gbar, [0])
    b = P.bottom()
    for x in range(len(P)):
        assert Ha.get(0, x + 1) == G.get(b, x)
        if x != b:
            assert da.get(0, x + 1) == A.get(b, x)


def _truncated_G(P, g, x, y):
    Q = truncate(P.interval_poset(x, y))
    G, _ = aug_pair(restrict(g, Q), [Q.bottom()])
    return G.get(Q.bottom(), Q.top())


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_truncation_identities_scalar_g(seed):
    rng = random.Random(seed)
    P = random_weak_poset(rng, max_size=9)
    g = random_scalar_g(rng, P)
    H, d = chow_pair(g)
    G, _ = aug_pair(g)
    for x, y in P.pairs():
        if P.rho(x, y) >= 2:
            assert d.get(x, y) == truncated_chow(P, g, x, y).shift(1)
    # G_y = g_{0,y} + t sum_{0 < x <= y} G_{trunc[0,x]} g_{x,y}; for an interval
    # of rank 1 the truncated term is g_{0,x}
    b = P.bottom()
    for y in P.upset(b):
        total = g.get(b, y)
        for x in P.interval(b, y):
            if x != b:
                gt = _truncated_G(P, g, b, x) if P.rho(b, x) >= 2 else g.get(b, x)
                total = total + (gt * g.get(x, y)).shift(1)
        assert total == G.get(b, y)


def test_zeta_truncation_specialisation():
    # H_{x,y} = 1 + t sum over z with rho(x,z) >= 2 of H of trunc[x,z]
    for P in (boolean_algebra(4), partition_lattice(4), subspace_lattice(3, 2)):
        g = zeta(P)
        H, _ = chow_pair(g)
        for x, y in P.pairs():
            total = ONE
            for z in P.interval(x, y):
                if P.rho(x, z) >= 2:
                    total = total + truncated_chow(P, g, x, z).shift(1)
            assert total == H.get(x, y)
