import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chow.poly import poly, ONE, ZERO, one_plus_t_power
from chow.ring import MPoly, gaussian_binomial
from chow.ltmatrix import (LTMatrix, DiagonalError, pascal, identity, toeplitz, gaussian, chow_family,
                           chow_via_subsets, chow_via_subsets_alt, delete_index, augment_matrix,
                           conjugate_scale, chow_family_by_deletion, apply_deranged, apply_eulerian)
from chow.generate import random_tn_matrix, random_signed_matrix
from chow.words import eulerian, derangement_poly

seeds = st.integers(0, 10 ** 6)


def test_non_unit_diagonal_rejected():
    with pytest.raises(DiagonalError):
        LTMatrix([[1], [1, 2]])


def test_row_length_checked():
    with pytest.raises(ValueError):
        LTMatrix([[1], [1, 1, 1]])


def test_pascal_family():
    F = chow_family(pascal(3))
    assert list(F.H) == [ONE, ONE, poly(1, 1), poly(1, 4, 1)]
    assert list(F.d) == [ONE, ZERO, poly(0, 1), poly(0, 1, 1)]
    assert F.G[2] == poly(1, 3, 1)
    assert F.A[2] == poly(0, 1, 1)


def test_identity_family():
    F = chow_family(identity(4))
    assert F.H[0] == ONE and all(h.is_zero() for h in F.H[1:])


def test_all_ones_toeplitz():
    F = chow_family(toeplitz([1] * 5, 4))
    for n in range(1, 5):
        assert F.H[n] == one_plus_t_power(n - 1)


def test_subset_sums():
    P = pascal(3)
    assert chow_via_subsets(P, 3) == poly(1, 4, 1)
    assert chow_via_subsets_alt(P, 3) == poly(1, 4, 1)
    assert chow_via_subsets(toeplitz([1] * 4, 3), 3) == poly(1, 2, 1)
    R = random_signed_matrix(random.Random(5), 4)
    assert chow_via_subsets(R, 1) == poly(R[1, 0])


def test_deletion():
    D = delete_index(pascal(3), 2)
    assert [list(r) for r in D.rows] == [[1], [1, 1], [1, 3, 1]]
    assert chow_family(pascal(3)).d[3] == chow_family(D).H[2].shift(1)
    assert delete_index(pascal(5), 5).truncated(4).rows == pascal(4).rows


def test_augmentation():
    Rbar = augment_matrix(pascal(3))
    assert list(Rbar.rows[2]) == [1, 1, 1]
    assert chow_family(pascal(3)).G[2] == chow_family(Rbar).H[3] == poly(1, 3, 1)
    assert chow_family(delete_index(Rbar, 2).truncated(2)).H[2].shift(1) == poly(0, 1, 1)


def test_conjugate_scaling():
    c = [Fraction(1, math.factorial(n)) for n in range(5)]
    F, Fs = chow_family(pascal(4)), chow_family(conjugate_scale(pascal(4), c))
    for n in range(5):
        assert Fs.H[n] == F.H[n] * c[n]
        assert Fs.d[n] == F.d[n] * c[n]
    assert conjugate_scale(pascal(4), [1] * 5).rows == pascal(4).rows


def test_gaussian_matrix_is_scaled_q_toeplitz():
    (q,) = MPoly.gens("q")
    N = 4
    qf = [1]
    for n in range(1, N + 1):
        qf.append(qf[-1] * sum((q ** i for i in range(n)), MPoly.constant(0, ("q",))))
    R = gaussian(N, q)
    for n in range(N + 1):
        for k in range(n + 1):
            assert R[n, k] == gaussian_binomial(n, k, q)
            assert R[n, k] * qf[k] * qf[n - k] == qf[n]


def test_deranged_and_eulerian_maps():
    P = pascal(3)
    assert apply_deranged(P, poly(0, 0, 0, 1)) == poly(0, 1, 1)
    assert apply_deranged(P, one_plus_t_power(3)) == poly(1, 4, 1)
    assert apply_eulerian(P, poly(0, 0, 1)) == poly(0, 1, 1)


def test_pascal_matches_permutation_statistics():
    F = chow_family(pascal(6))
    for n in range(1, 7):
        assert F.H[n] == eulerian(n)
        assert F.d[n] == derangement_poly(n)


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_routes_agree_on_signed_matrices(seed):
    rng = random.Random(seed)
    R = random_signed_matrix(rng, rng.randint(1, 6))
    F = chow_family(R)
    D = chow_family_by_deletion(R)
    assert F == D
    for n in range(R.N + 1):
        assert chow_via_subsets(R, n) == F.H[n] == chow_via_subsets_alt(R, n)


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_deranged_map_on_row_polynomials(seed):
    rng = random.Random(seed)
    R = random_tn_matrix(rng, rng.randint(1, 6))
    F = chow_family(R)
    for n in range(R.N + 1):
        assert apply_deranged(R, R.row_poly(n), F) == F.H[n]
        assert apply_eulerian(R, R.row_poly(n), F) == F.G[n]
