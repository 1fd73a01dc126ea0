"""Exact coefficient rings.

Two kinds of coefficients flow through the library: plain Python numbers
(``int`` and :class:`fractions.Fraction`) and :class:`MPoly`, a sparse
multivariate polynomial with a fixed variable ordering.  Generic code
mixes both freely with ``0`` and ``1`` literals, so ``MPoly`` accepts
numbers on either side of every operator.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class MPoly:
    """Sparse polynomial in named variables over the rationals.

    ``terms`` maps exponent tuples (one entry per variable in ``vars``) to
    nonzero coefficients.  Instances are immutable and hashable.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple, object] | None = None, vars: Iterable[str] = ()):
        self.vars = tuple(vars)
        clean = {}
        for exps, c in (terms or {}).items():
            if c == 0:
                continue
            exps = tuple(exps)
            if len(exps) != len(self.vars):
                raise ValueError("exponent vector %r does not match variables %r" % (exps, self.vars))
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent in %r" % (exps,))
            clean[exps] = _norm(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def gens(cls, *names: str) -> tuple[MPoly, ...]:
        out = []
        for i in range(len(names)):
            e = [0] * len(names)
            e[i] = 1
            out.append(cls({tuple(e): 1}, names))
        return tuple(out)

    @classmethod
    def constant(cls, c, vars: Iterable[str]) -> MPoly:
        vars = tuple(vars)
        return cls({(0,) * len(vars): c}, vars)

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.vars == self.vars:
                return other
            if not other.vars or other.is_constant():
                return MPoly.constant(other.constant_term(), self.vars)
            if not self.vars or self.is_constant():
                return None
            raise ValueError("variable mismatch: %r vs %r" % (self.vars, other.vars))
        if isinstance(other, (int, Fraction)):
            return MPoly.constant(other, self.vars)
        return NotImplemented

    def _lift(self, other):
        # self is a bare constant but other carries variables
        return MPoly.constant(self.constant_term(), other.vars)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), 0)

    def total_degree(self) -> int | None:
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_nonnegative(self) -> bool:
        """True when every coefficient is >= 0 (monomial positivity)."""
        return all(c >= 0 for c in self.terms.values())

    def leading(self) -> tuple[tuple, object]:
        exps = max(self.terms)
        return exps, self.terms[exps]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o is None:
            return self._lift(other) + other
        terms = dict(self.terms)
        for e, c in o.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MPoly(terms, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return MPoly({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o is None:
            return self._lift(other) - other
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o is None:
            return self._lift(other) * other
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MPoly(terms, self.vars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.constant(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, other) -> MPoly:
        """Divide exactly, raising ArithmeticError on a nonzero remainder."""
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return MPoly({e: Fraction(c) / other for e, c in self.terms.items()}, self.vars)
        o = self._coerce(other)
        if o is None:
            return self._lift(other).exact_div(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lead_e, lead_c = o.leading()
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            e = max(rem)
            shift = tuple(a - b for a, b in zip(e, lead_e))
            if any(s < 0 for s in shift):
                raise ArithmeticError("inexact multivariate division")
            c = Fraction(rem[e]) / lead_c
            quot[shift] = c
            for oe, oc in o.terms.items():
                ne = tuple(a + b for a, b in zip(oe, shift))
                v = rem.get(ne, 0) - c * oc
                if v == 0:
                    rem.pop(ne, None)
                else:
                    rem[ne] = v
        return MPoly(quot, self.vars)

    def __truediv__(self, other):
        return self.exact_div(other)

    def subs(self, values: Mapping[str, object]):
        """Substitute numbers or MPolys for some variables."""
        keep = [i for i, v in enumerate(self.vars) if v not in values]
        new_vars = tuple(self.vars[i] for i in keep)
        total = 0
        for e, c in self.terms.items():
            term = c
            for i, v in enumerate(self.vars):
                if v in values and e[i]:
                    term = term * values[v] ** e[i]
            rest = tuple(e[i] for i in keep)
            term = term * MPoly({rest: 1}, new_vars) if new_vars else term
            total = total + term
        if isinstance(total, MPoly) and not total.vars:
            return total.constant_term()
        return total

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                if self.is_constant() and other.is_constant():
                    return self.constant_term() == other.constant_term()
                return False
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else "%s^%d" % (v, k) for v, k in zip(self.vars, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append("%s*%s" % (c, mono))
        return " + ".join(parts).replace("+ -", "- ")


# -- generic helpers used across modules -------------------------------------


def is_zero(c) -> bool:
    return c == 0


def is_nonnegative(c) -> bool:
    """Coefficientwise nonnegativity for numbers and MPolys."""
    if isinstance(c, MPoly):
        return c.is_nonnegative()
    return c >= 0


def exact_div(a, b):
    """Exact quotient a/b in the coefficient ring (a field for numbers)."""
    if isinstance(a, MPoly):
        return a.exact_div(b)
    if isinstance(b, MPoly):
        return MPoly.constant(a, b.vars).exact_div(b)
    if b == 0:
        raise ZeroDivisionError("division by zero")
    return _norm(Fraction(a) / Fraction(b))


def is_rational(c) -> bool:
    return isinstance(c, Rational) and not isinstance(c, bool)


def format_rational(c) -> str:
    """Canonical 'p/q' rendering, gcd 1 and q > 0; integers render as 'p'."""
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def parse_rational(s) -> int | Fraction:
    if isinstance(s, bool):
        raise ValueError("not a rational: %r" % (s,))
    if isinstance(s, int):
        return s
    if isinstance(s, str):
        try:
            return _norm(Fraction(s.strip()))
        except (ValueError, ZeroDivisionError):
            raise ValueError("not a rational: %r" % (s,)) from None
    raise ValueError("not a rational: %r" % (s,))


def q_integer(n: int, q):
    """[n]_q = 1 + q + ... + q^(n-1)."""
    total = 0
    power = 1
    for _ in range(n):
        total = total + power
        power = power * q
    return total


def q_factorial(n: int, q):
    out = 1
    for i in range(1, n + 1):
        out = out * q_integer(i, q)
    return out


def gaussian_binomial(n: int, k: int, q):
    """Gaussian binomial coefficient via the q-Pascal rule (no division)."""
    if k < 0 or k > n:
        return 0
    row = [1]
    for m in range(1, n + 1):
        new = [1] * (m + 1)
        for j in range(1, m):
            new[j] = row[j - 1] + q ** j * row[j]
        row = new
    return row[k]
