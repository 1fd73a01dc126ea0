"""Incidence algebra of a weakly ranked poset over R[t], KLS functions and
the Chow-type functions built from them.

Incidence functions are stored as dictionaries keyed by index pairs
``(x, y)`` with ``x <= y``.  Most routines accept ``rows``: a collection of
source elements ``x``; only the values ``f[x, y]`` for those sources are
computed.  Every recursion here runs along a single row, so restricting
to the row of a least element is enough for the "characteristic"
polynomials ``H_P``, ``G_P``, ...
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .poly import Polynomial, ONE, ZERO, T, reciprocal, s_op, t_integer, is_palindromic
from .poset import Poset, PosetError, augment_poset, truncate


class KLSError(ValueError):
    """g violates g[x,x] = 1 or deg g[x,y] < rho(x,y)/2."""


class IncidenceFunction:
    """A function on the intervals of ``poset`` with polynomial values."""

    def __init__(self, poset: Poset, values: Mapping[tuple[int, int], Polynomial]):
        self.poset = poset
        self.values = {}
        for (x, y), v in values.items():
            if not poset.leq(x, y):
                raise PosetError("incidence value on a non-interval (%r, %r)" % (x, y))
            self.values[(x, y)] = v if isinstance(v, Polynomial) else Polynomial([v])

    def __getitem__(self, key) -> Polynomial:
        return self.values[key]

    def get(self, x: int, y: int) -> Polynomial:
        return self.values[(x, y)]

    def __contains__(self, key):
        return key in self.values

    def rows(self) -> set[int]:
        return {x for x, _ in self.values}

    def at(self, x_label, y_label) -> Polynomial:
        P = self.poset
        return self.values[(P.index(x_label), P.index(y_label))]

    def is_scalar(self) -> bool:
        return all(v.degree is None or v.degree == 0 for v in self.values.values()) and all(
            self.values[(x, x)] == ONE for (x, y) in self.values if x == y)

    def __eq__(self, other):
        if not isinstance(other, IncidenceFunction):
            return NotImplemented
        return self.poset is other.poset and self.values == other.values

    def agrees_with(self, other: IncidenceFunction) -> bool:
        """Equal on every pair both functions define."""
        common = set(self.values) & set(other.values)
        return all(self.values[k] == other.values[k] for k in common)

    def __repr__(self):
        return "IncidenceFunction(%d values)" % len(self.values)


# -- basic elements -------------------------------------------------------------


def _all_rows(P: Poset, rows) -> list[int]:
    return list(range(len(P))) if rows is None else list(rows)


def delta(P: Poset) -> IncidenceFunction:
    return IncidenceFunction(P, {(x, y): ONE if x == y else ZERO for x, y in P.pairs()})


def zeta(P: Poset) -> IncidenceFunction:
    return IncidenceFunction(P, {(x, y): ONE for x, y in P.pairs()})


def scalar_function(P: Poset, table: Mapping[tuple[int, int], object], default=1) -> IncidenceFunction:
    """Scalar g from a table of (x, y) -> number; diagonal is forced to 1."""
    vals = {}
    for x, y in P.pairs():
        if x == y:
            vals[(x, y)] = ONE
        else:
            vals[(x, y)] = Polynomial([table.get((x, y), default)])
    return IncidenceFunction(P, vals)


def _same_host(f: IncidenceFunction, g: IncidenceFunction):
    if f.poset is not g.poset:
        raise PosetError("incidence functions live on different posets")


# -- algebra ------------------------------------------------------------------------


def convolve(f: IncidenceFunction, g: IncidenceFunction, rows: Iterable[int] | None = None) -> IncidenceFunction:
    """(fg)[x,y] = sum over x <= z <= y of f[x,z] g[z,y]."""
    _same_host(f, g)
    P = f.poset
    out = {}
    for x in _all_rows(P, rows):
        for y in P.upset(x):
            acc = ZERO
            for z in P.interval(x, y):
                acc = acc + f.values[(x, z)] * g.values[(z, y)]
            out[(x, y)] = acc
    return IncidenceFunction(P, out)


def invert(f: IncidenceFunction, rows: Iterable[int] | None = None) -> IncidenceFunction:
    """Two-sided convolution inverse of a function with unit diagonal."""
    P = f.poset
    out = {}
    for x in _all_rows(P, rows):
        if f.values[(x, x)] != ONE:
            raise KLSError("diagonal entry at %r is %r, not 1" % (P.labels[x], f.values[(x, x)]))
        out[(x, x)] = ONE
        for y in P.upset(x):
            if y == x:
                continue
            acc = ZERO
            for z in P.interval(x, y):
                if z != y:
                    acc = acc + out[(x, z)] * f.values[(z, y)]
            out[(x, y)] = -acc
    return IncidenceFunction(P, out)


def reciprocal_function(f: IncidenceFunction) -> IncidenceFunction:
    """I(f)[x,y] = I_{rho(x,y)}(f[x,y])."""
    P = f.poset
    return IncidenceFunction(P, {(x, y): reciprocal(v, P.rho(x, y)) for (x, y), v in f.values.items()})


def check_kls(g: IncidenceFunction) -> None:
    P = g.poset
    for x, y in P.pairs():
        v = g.values.get((x, y))
        if v is None:
            raise KLSError("g undefined on (%r, %r)" % (P.labels[x], P.labels[y]))
        if x == y:
            if v != ONE:
                raise KLSError("g[x,x] != 1 at %r" % (P.labels[x],))
        elif v.degree is not None and 2 * v.degree >= P.rho(x, y):
            raise KLSError("deg g = %d not < rho/2 = %d/2 on interval (%r, %r)"
                           % (v.degree, P.rho(x, y), P.labels[x], P.labels[y]))


def _upset_rows(P: Poset, rows) -> list[int]:
    if rows is None:
        return list(range(len(P)))
    need = set()
    for x in rows:
        need.update(P.upset(x))
    return sorted(need)


def kernel_from_g(g: IncidenceFunction, rows: Iterable[int] | None = None) -> IncidenceFunction:
    """The P-kernel g^{-1} I(g)."""
    check_kls(g)
    ginv = invert(g, rows)
    return convolve(ginv, reciprocal_function(g), rows)


def reduced_kernel(kappa: IncidenceFunction) -> IncidenceFunction:
    """(kappa - t delta)/(t - 1), exact entrywise."""
    out = {}
    for (x, y), v in kappa.values.items():
        num = v - T if x == y else v
        out[(x, y)] = num.div_t_minus_1()
    return IncidenceFunction(kappa.poset, out)


def chow_via_kernel(g: IncidenceFunction, rows: Iterable[int] | None = None) -> IncidenceFunction:
    """Chow function as the inverse of minus the reduced kernel."""
    P = g.poset
    need = _upset_rows(P, rows)
    kbar = reduced_kernel(kernel_from_g(g, need))
    m = IncidenceFunction(P, {k: -v for k, v in kbar.values.items()})
    out = {}
    for x in _all_rows(P, rows):
        out[(x, x)] = ONE
        for y in P.upset(x):
            if y == x:
                continue
            acc = ZERO
            for z in P.interval(x, y):
                if z != y:
                    acc = acc + out[(x, z)] * m.values[(z, y)]
            out[(x, y)] = -acc
    return IncidenceFunction(P, out)


def _pair_recursion(g: IncidenceFunction, rows, offset: int):
    """Shared recursion: e[x,y] = t S_{rho+offset}(sum_{z<y} e[x,z] g[z,y])."""
    check_kls(g)
    P = g.poset
    E, F = {}, {}
    for x in _all_rows(P, rows):
        E[(x, x)] = ONE
        F[(x, x)] = ONE
        for y in P.upset(x):
            if y == x:
                continue
            acc = ZERO
            for z in P.interval(x, y):
                if z != y:
                    acc = acc + E[(x, z)] * g.values[(z, y)]
            e = s_op(acc, P.rho(x, y) + offset).shift(1)
            E[(x, y)] = e
            F[(x, y)] = acc + e
    return IncidenceFunction(P, F), IncidenceFunction(P, E)


def chow_pair(g: IncidenceFunction, rows: Iterable[int] | None = None):
    """(H, d) with d[x,y] = t S_{rho-1}(sum_{x<=z<y} d[x,z] g[z,y]) and H = d g."""
    return _pair_recursion(g, rows, -1)


def aug_pair(g: IncidenceFunction, rows: Iterable[int] | None = None):
    """(G, A) with A[x,y] = t S_rho(sum_{x<=z<y} A[x,z] g[z,y]) and G = A g."""
    return _pair_recursion(g, rows, 0)


def chow_via_chains(g: IncidenceFunction, x: int, y: int) -> Polynomial:
    """H[x,y] as a weighted sum over chains x = z0 < z1 < ... < zm <= y
    (scalar g only)."""
    P = g.poset
    if not g.is_scalar():
        raise KLSError("chain-sum formula needs a scalar g")
    if not P.leq(x, y):
        raise PosetError("(%r, %r) is not an interval" % (P.labels[x], P.labels[y]))
    sc = {k: v[0] for k, v in g.values.items()}
    members = P.interval(x, y)
    total = ZERO

    def walk(z, weight):
        nonlocal total
        total = total + weight * sc[(z, y)]
        for w in members:
            if P.lt(z, w):
                step = t_integer(P.rho(z, w) - 1)
                if step.is_zero() or sc[(z, w)] == 0:
                    continue
                walk(w, weight * step * T * sc[(z, w)])

    walk(x, ONE)
    return total


def chow_via_chains_general(g: IncidenceFunction, x: int, y: int) -> Polynomial:
    """Chain-sum for arbitrary KLS g with step weights (I(g) - t g)/(t - 1)."""
    P = g.poset
    members = P.interval(x, y)
    total = ZERO

    def step(z, w):
        v = g.values[(z, w)]
        return (reciprocal(v, P.rho(z, w)) - v * T).div_t_minus_1()

    def walk(z, weight):
        nonlocal total
        total = total + weight * g.values[(z, y)]
        for w in members:
            if P.lt(z, w):
                s = step(z, w)
                if not s.is_zero():
                    walk(w, weight * s)

    walk(x, ONE)
    return total


# -- conditions of the defining theorems --------------------------------------------


def chow_conditions(H: IncidenceFunction, d: IncidenceFunction, g: IncidenceFunction) -> list[str]:
    """Names of violated conditions among: d[x,x]=1, I(H)=tH+(1-t)delta,
    I(d)=d, H=dg (checked on the rows of d)."""
    P = g.poset
    bad = []
    if any(d.values[(x, y)] != ONE for (x, y) in d.values if x == y):
        bad.append("d-diagonal")
    for (x, y), h in H.values.items():
        r = P.rho(x, y)
        want = T * h + (ONE - T if x == y else ZERO)
        if h.degree is not None and h.degree > r or reciprocal(h, r) != want:
            bad.append("H-reciprocity")
            break
    for (x, y), v in d.values.items():
        if v.degree is not None and v.degree > P.rho(x, y) or not is_palindromic(v, P.rho(x, y)):
            bad.append("d-palindromic")
            break
    prod = convolve(d, g, rows=d.rows())
    if any(prod.values[k] != H.values.get(k) for k in prod.values if k in H.values):
        bad.append("H=dg")
    return bad


def aug_conditions(G: IncidenceFunction, A: IncidenceFunction, g: IncidenceFunction) -> list[str]:
    P = g.poset
    bad = []
    if any(A.values[(x, y)] != ONE for (x, y) in A.values if x == y):
        bad.append("A-diagonal")
    for (x, y), v in G.values.items():
        if v.degree is not None and v.degree > P.rho(x, y) or not is_palindromic(v, P.rho(x, y)):
            bad.append("G-palindromic")
            break
    for (x, y), a in A.values.items():
        r = P.rho(x, y)
        want = a + (T - ONE if x == y else ZERO)
        if a.degree is not None and a.degree > r or reciprocal(a, r) * T != want:
            bad.append("A-reciprocity")
            break
    prod = convolve(A, g, rows=A.rows())
    if any(prod.values[k] != G.values.get(k) for k in prod.values if k in G.values):
        bad.append("G=Ag")
    return bad


# -- augmentation and truncation helpers -------------------------------------------


def augment(P: Poset, g: IncidenceFunction):
    """(aug(P), g_bar): new bottom with g_bar[new, y] = g[old bottom, y]."""
    check_kls(g)
    Q = augment_poset(P)
    b = P.bottom()
    vals = {(0, 0): ONE}
    for (x, y), v in g.values.items():
        vals[(x + 1, y + 1)] = v
    for y in range(len(P)):
        vals[(0, y + 1)] = g.values[(b, y)]
    return Q, IncidenceFunction(Q, vals)


def restrict(g: IncidenceFunction, Q: Poset) -> IncidenceFunction:
    """Restrict g to a poset whose labels are a subset of g's host labels."""
    P = g.poset
    idx = [P.index(lab) for lab in Q.labels]
    return IncidenceFunction(Q, {(a, b): g.values[(idx[a], idx[b])] for a, b in Q.pairs()})


def characteristic(P: Poset, g: IncidenceFunction | None = None):
    """H, d, G, A at the pairs (bottom, x) as dicts label -> Polynomial."""
    g = g or zeta(P)
    b = P.bottom()
    if b is None:
        raise PosetError("poset has no least element")
    H, d = chow_pair(g, [b])
    G, A = aug_pair(g, [b])
    pick = lambda F: {P.labels[y]: F.values[(b, y)] for y in range(len(P))}
    return pick(H), pick(d), pick(G), pick(A)


def chow_polynomial(P: Poset, g: IncidenceFunction | None = None) -> Polynomial:
    """H of a bounded poset (value on the whole poset)."""
    g = g or zeta(P)
    b, top = P.bottom(), P.top()
    if b is None or top is None:
        raise PosetError("poset is not bounded")
    H, _ = chow_pair(g, [b])
    return H.values[(b, top)]


def interval_chow(P: Poset, g: IncidenceFunction, x: int, y: int) -> Polynomial:
    """H of the interval [x, y] computed on the interval as its own poset."""
    Q = P.interval_poset(x, y)
    return chow_polynomial(Q, restrict(g, Q))


def truncated_chow(P: Poset, g: IncidenceFunction, x: int, y: int, times: int = 1) -> Polynomial:
    """H of tau^times([x, y]) with g restricted."""
    Q = P.interval_poset(x, y)
    for _ in range(times):
        Q = truncate(Q)
    return chow_polynomial(Q, restrict(g, Q))
