import pytest

from chow.poly import Polynomial, poly
from chow.ring import MPoly
from chow.ltmatrix import chow_family, toeplitz, gaussian
from chow.minors import gamma_chow
from chow.words import (exc, des, maj, inv, descents, is_derangement, eulerian, derangement_poly,
                        q_eulerian, stable_descent_gamma, variables, super_elementary, smirnov_H,
                        qn_word_H, jacobi_trudi_gamma)


def test_statistics():
    p = (3, 1, 2)
    assert exc(p) == 1 and descents(p) == [1] and des(p) == 1 and maj(p) == 1 and inv(p) == 2
    assert is_derangement((2, 3, 1)) and not is_derangement((1, 3, 2))


def test_eulerian_and_derangements():
    assert eulerian(3) == poly(1, 4, 1)
    assert derangement_poly(3) == poly(0, 1, 1)
    assert eulerian(4) == poly(1, 11, 11, 1)


def test_q_eulerian_specialises():
    assert q_eulerian(4, 1) == eulerian(4)


def test_stable_descent_gamma_q1():
    # at q = 1 these count permutations by descents with stable descent sets
    assert stable_descent_gamma(3, 1) == poly(1, 2)
    assert stable_descent_gamma(2, 1, augmented=True) == poly(1, 1)


def test_enumeration_bound():
    with pytest.raises(ValueError):
        eulerian(9)
    with pytest.raises(ValueError):
        smirnov_H(7, 2)


def _e_family(m_pos, m_neg, N):
    xs, ys = variables(m_pos, m_neg)
    a = super_elementary(N, xs, ys).coeffs
    return xs, ys, toeplitz(a, N)


def test_smirnov_small():
    xs, _ = variables(3)
    x1, x2, x3 = xs
    e2 = x1 * x2 + x1 * x3 + x2 * x3
    assert smirnov_H(2, 3, xs) == Polynomial([e2, e2])
    assert smirnov_H(1, 3, xs) == Polynomial([x1 + x2 + x3])


def test_smirnov_matches_matrix():
    xs, _, R = _e_family(2, 0, 4)
    F = chow_family(R)
    for n in range(1, 5):
        assert smirnov_H(n, 2, xs) == F.H[n]


def test_qn_words():
    xs, ys = variables(2, 0)
    assert qn_word_H(3, 2, 0, xs, ys) == smirnov_H(3, 2, xs)
    xs, ys = variables(0, 1)
    (y1,) = ys
    assert qn_word_H(2, 0, 1, xs, ys) == Polynomial([y1 * y1, y1 * y1])
    xs, ys, R = _e_family(1, 1, 3)
    F = chow_family(R)
    for n in range(1, 4):
        assert qn_word_H(n, 1, 1, xs, ys) == F.H[n]


def test_jacobi_trudi_gamma():
    xs, ys, R = _e_family(2, 1, 4)
    a = [R[n, 0] for n in range(5)]
    for n in range(1, 5):
        plain = gamma_chow(R, n)
        assert list(plain.entries) == jacobi_trudi_gamma(a, n)
        assert all(c.is_nonnegative() for c in plain.entries)
        assert list(gamma_chow(R, n, augmented=True).entries) == jacobi_trudi_gamma(a, n, augmented=True)


def test_q_gamma_from_gaussian():
    (q,) = MPoly.gens("q")
    R = gaussian(5, q)
    for n in range(1, 6):
        assert gamma_chow(R, n).poly == stable_descent_gamma(n, q)
        assert gamma_chow(R, n, augmented=True).poly == stable_descent_gamma(n, q, augmented=True)
