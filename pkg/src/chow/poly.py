"""Dense univariate polynomials in t over an exact coefficient ring.

Coefficients may be ints, Fractions or :class:`chow.ring.MPoly` values.
Besides the usual ring operations this module provides the reciprocal
operator ``I_n(f) = t^n f(1/t)``, the difference operator
``S_n(f) = (I_n(f) - f)/(t - 1)`` and the gamma basis change.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .ring import exact_div


class DegreeError(ValueError):
    """A polynomial exceeds the degree bound an operator requires."""


class NotPalindromicError(ValueError):
    pass


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    out = []
    for c in coeffs:
        if isinstance(c, Fraction) and c.denominator == 1:
            c = c.numerator
        out.append(c)
    return tuple(out)


class Polynomial:
    """Immutable dense polynomial; ``coeffs[k]`` is the coefficient of t^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c=1) -> Polynomial:
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls([c])

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int):
        if k < 0:
            raise IndexError("negative coefficient index")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def low_degree(self) -> int | None:
        """Index of the lowest nonzero coefficient."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _wrap(other):
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other])

    def __add__(self, other):
        o = self._wrap(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Polynomial(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    def __rmul__(self, other):
        return Polynomial(other * c for c in self.coeffs)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> Polynomial:
        """Multiply by t^k (k may be negative if the low terms vanish)."""
        if k >= 0:
            return Polynomial([0] * k + list(self.coeffs))
        if any(c != 0 for c in self.coeffs[:-k]):
            raise ArithmeticError("t^%d does not divide %r" % (-k, self))
        return Polynomial(self.coeffs[-k:])

    def scale(self, c) -> Polynomial:
        return Polynomial(c * a for a in self.coeffs)

    def div_scalar(self, c) -> Polynomial:
        return Polynomial(exact_div(a, c) for a in self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial(k * self.coeffs[k] for k in range(1, len(self.coeffs)))

    def divmod(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Euclidean division over a field of coefficients."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial(), self
        quot = [0] * (dq + 1)
        lead = other.coeffs[-1]
        for i in range(dq, -1, -1):
            c = exact_div(rem[i + len(other.coeffs) - 1], lead)
            quot[i] = c
            if c != 0:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = rem[i + j] - c * b
        return Polynomial(quot), Polynomial(rem[: len(other.coeffs) - 1])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def div_t_minus_1(self) -> Polynomial:
        """Exact quotient by (t - 1) via synthetic division."""
        if not self.coeffs:
            return Polynomial()
        n = len(self.coeffs) - 1
        quot = [0] * n
        carry = 0
        for k in range(n, 0, -1):
            carry = carry + self.coeffs[k]
            quot[k - 1] = carry
        remainder = carry + self.coeffs[0]
        assert remainder == 0, "inexact division by (t-1): remainder %r" % (remainder,)
        return Polynomial(quot)

    # -- comparison and display -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return self.coeffs == (other,)

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "Polynomial(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else "t^%d" % k)
            cs = str(c)
            if isinstance(c, (int, Fraction)) and not isinstance(c, bool):
                if mono and c == 1:
                    cs = ""
            else:
                cs = "(%s)" % cs
            terms.append(cs + ("*" if cs and mono else "") + mono)
        return "Polynomial(%s)" % " + ".join(terms)


T = Polynomial([0, 1])
ONE = Polynomial([1])
ZERO = Polynomial()


def poly(*coeffs) -> Polynomial:
    return Polynomial(coeffs)


def one_plus_t_power(k: int) -> Polynomial:
    return Polynomial([1, 1]) ** k


def t_integer(k: int) -> Polynomial:
    """[k]_t = 1 + t + ... + t^(k-1); zero for k <= 0."""
    return Polynomial([1] * max(k, 0))


# -- the reciprocal / difference operators -----------------------------------


def _check_degree(f: Polynomial, n: int):
    if n < 0:
        raise DegreeError("negative degree bound %d" % n)
    if f.degree is not None and f.degree > n:
        raise DegreeError("degree %d exceeds n=%d" % (f.degree, n))


def reciprocal(f: Polynomial, n: int) -> Polynomial:
    """t^n f(1/t); requires deg f <= n."""
    _check_degree(f, n)
    return Polynomial(f[n - k] for k in range(n + 1))


def s_op(f: Polynomial, n: int) -> Polynomial:
    """(I_n(f) - f)/(t - 1), an exact division."""
    _check_degree(f, n)
    return (reciprocal(f, n) - f).div_t_minus_1()


def is_palindromic(f: Polynomial, n: int) -> bool:
    return reciprocal(f, n) == f


# -- gamma vectors ------------------------------------------------------------


@dataclass(frozen=True)
class GammaVector:
    """Coordinates of a palindromic polynomial in the basis t^k (1+t)^(n-2k)."""

    entries: tuple
    n: int

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) != self.n // 2 + 1:
            raise ValueError(
                "gamma vector for n=%d needs %d entries, got %d"
                % (self.n, self.n // 2 + 1, len(self.entries))
            )

    @property
    def center(self) -> Fraction:
        return Fraction(self.n, 2)

    @property
    def poly(self) -> Polynomial:
        """The gamma polynomial sum gamma_k t^k."""
        return Polynomial(self.entries)

    def trimmed(self) -> tuple:
        return Polynomial(self.entries).coeffs

    def is_nonnegative(self) -> bool:
        from .ring import is_nonnegative

        return all(is_nonnegative(c) for c in self.entries)


def gamma_extract(f: Polynomial, n: int) -> GammaVector:
    """Gamma coordinates of f viewed as palindromic with center n/2."""
    if not is_palindromic(f, n):
        raise NotPalindromicError("%r is not palindromic with center %d/2" % (f, n))
    rest = f
    entries = []
    for k in range(n // 2 + 1):
        c = rest[k]
        entries.append(c)
        if c != 0:
            rest = rest - (one_plus_t_power(n - 2 * k) * c).shift(k)
    assert rest.is_zero(), "gamma extraction left a remainder"
    return GammaVector(tuple(entries), n)


def gamma_expand(g: GammaVector | Sequence, n: int) -> Polynomial:
    entries = g.entries if isinstance(g, GammaVector) else tuple(g)
    if isinstance(g, GammaVector) and g.n != n:
        raise ValueError("gamma vector built for n=%d, expanded with n=%d" % (g.n, n))
    if len(entries) != n // 2 + 1:
        raise ValueError("gamma vector length %d does not match n=%d" % (len(entries), n))
    total = Polynomial()
    for k, c in enumerate(entries):
        if c != 0:
            total = total + (one_plus_t_power(n - 2 * k) * c).shift(k)
    return total
