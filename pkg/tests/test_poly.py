from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chow.poly import (Polynomial, poly, reciprocal, s_op, is_palindromic, gamma_extract, gamma_expand,
                       DegreeError, NotPalindromicError, one_plus_t_power, T, ONE, ZERO)

coeffs = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), max_size=6)


def test_reciprocal_examples():
    assert reciprocal(poly(1, 4, 1), 3) == poly(0, 1, 4, 1)
    assert reciprocal(poly(1, 4, 1), 2) == poly(1, 4, 1)
    assert reciprocal(ZERO, 5) == ZERO


def test_reciprocal_degree_error():
    with pytest.raises(DegreeError):
        reciprocal(poly(1, 1, 1), 1)


def test_s_op_examples():
    assert s_op(poly(1), 2) == poly(1, 1)
    assert s_op(poly(1, 1), 2) == poly(1, 1)
    assert s_op(poly(1, 4, 1), 2) == ZERO


def test_palindromic_examples():
    assert is_palindromic(poly(1, 4, 1), 2)
    assert not is_palindromic(poly(1, 4, 1), 3)
    assert is_palindromic(ZERO, 7)


def test_gamma_examples():
    assert gamma_extract(poly(1, 4, 1), 2).entries == (1, 2)
    assert gamma_extract(one_plus_t_power(3), 3).entries == (1, 0)
    assert gamma_extract(poly(1, 0, 1), 2).entries == (1, -2)
    assert gamma_expand((1, 2), 2) == poly(1, 4, 1)
    assert gamma_expand((1, 0), 3) == one_plus_t_power(3)
    assert gamma_expand((0, 1), 2) == T


def test_gamma_rejects_non_palindromic():
    with pytest.raises(NotPalindromicError):
        gamma_extract(poly(1, 2), 2)


def test_division_by_t_minus_1():
    assert (poly(-1, 0, 1)).div_t_minus_1() == poly(1, 1)
    with pytest.raises(AssertionError):
        poly(1, 1).div_t_minus_1()


def test_divmod():
    q, r = poly(1, 0, 0, 1).divmod(poly(1, 1))
    assert q == poly(1, -1, 1) and r == ZERO


@given(coeffs, coeffs, coeffs)
def test_ring_laws(a, b, c):
    f, g, h = Polynomial(a), Polynomial(b), Polynomial(c)
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f - f).is_zero()


@given(coeffs, st.integers(0, 3))
def test_reciprocal_involution(a, extra):
    f = Polynomial(a)
    n = (f.degree or 0) + extra
    assert reciprocal(reciprocal(f, n), n) == f


@given(coeffs, st.integers(0, 3))
def test_s_op_characterisation(a, extra):
    f = Polynomial(a)
    n = (f.degree or 0) + extra
    s = s_op(f, n)
    assert s * (T - ONE) == reciprocal(f, n) - f
    assert is_palindromic(s, n - 1) if n >= 1 else True


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=3), min_size=1, max_size=4),
       st.integers(0, 7))
def test_gamma_round_trip(g, n):
    size = n // 2 + 1
    g = (g + [0] * size)[:size]
    f = gamma_expand(g, n)
    assert is_palindromic(f, n)
    assert list(gamma_extract(f, n).entries) == g


def test_rational_coefficients_kept_exact():
    f = poly(Fraction(1, 3), Fraction(2, 3))
    assert f * 3 == poly(1, 2)
