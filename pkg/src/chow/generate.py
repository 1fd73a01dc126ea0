"""Random instance generators for property tests and the acceptance suite.

All generators take a ``random.Random`` so runs are reproducible from a seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .incidence import IncidenceFunction, scalar_function
from .ltmatrix import LTMatrix, identity
from .poly import Polynomial
from .poset import Poset, boolean_algebra, satisfies_covering
from .resolution import from_lambda
from .toeplitz import TruncatedSeries, PFData


def _rational(rng: random.Random, lo: int = 0, hi: int = 4, den: int = 3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def elementary_bidiagonal(N: int, i: int, c) -> LTMatrix:
    """Identity with c at position (i, i-1)."""
    rows = [[1 if k == n else 0 for k in range(n + 1)] for n in range(N + 1)]
    rows[i][i - 1] = c
    return LTMatrix(rows)


def random_tn_matrix(rng: random.Random, N: int, factors: int | None = None) -> LTMatrix:
    """Product of elementary bidiagonal matrices with nonnegative entries,
    which is totally nonnegative by construction."""
    R = identity(N)
    if N == 0:
        return R
    factors = factors if factors is not None else N * (N + 1) // 2 + rng.randint(0, N)
    for _ in range(factors):
        i = rng.randint(1, N)
        R = R.matmul(elementary_bidiagonal(N, i, _rational(rng, 0, 3, 2)))
    return R


def random_lambda(rng: random.Random, N: int, zero_prob: float = 0.2) -> list[list]:
    return [[0 if rng.random() < zero_prob else _rational(rng, 1, 3, 2) for _ in range(n + 1)]
            for n in range(N)]


def random_resolvable(rng: random.Random, N: int) -> tuple[LTMatrix, list[list]]:
    lam = random_lambda(rng, N)
    return from_lambda(lam), lam


def random_signed_matrix(rng: random.Random, N: int) -> LTMatrix:
    return LTMatrix([[rng.randint(-3, 3) if k < n else 1 for k in range(n + 1)] for n in range(N + 1)])


def random_series(rng: random.Random, N: int) -> TruncatedSeries:
    return TruncatedSeries([1] + [Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(N)])


def random_pf_data(rng: random.Random) -> PFData:
    return PFData(
        gamma=_rational(rng, 0, 2, 2),
        alphas=tuple(_rational(rng, 0, 3, 2) for _ in range(rng.randint(0, 3))),
        betas=tuple(Fraction(rng.randint(0, 2), rng.randint(2, 4)) for _ in range(rng.randint(0, 2))),
    )


def random_weak_poset(rng: random.Random, max_size: int = 12, edge_prob: float = 0.35,
                      bounded: bool = True) -> Poset:
    """Random order on at most ``max_size`` elements with a random weak rank.

    Relations only go from lower to higher indices, so the order is acyclic.
    Heights strictly increase along relations; steps of 1..3 make the rank
    weak (not necessarily graded).
    """
    inner = rng.randint(1, max_size - 2 if bounded else max_size)
    rel = [(i, j) for i in range(inner) for j in range(i + 1, inner) if rng.random() < edge_prob]
    labels = list(range(inner))
    if bounded:
        b, t = inner, inner + 1
        rel += [(b, i) for i in range(inner)] + [(i, t) for i in range(inner)] + [(b, t)]
        labels += ["bot", "top"]
    return Poset(labels, rel, weak_rank=_heights(labels, rel, rng, bounded))


def _heights(labels, rel, rng, bounded):
    n = len(labels)
    preds = {i: [a for a, b in rel if b == i] for i in range(n)}
    h: dict[int, int] = {}

    def height(i):
        if i not in h:
            h[i] = max((height(p) + rng.randint(1, 3) for p in preds[i]), default=0)
        return h[i]
    # the bottom first, then inner elements in index order, then the top
    order = ([n - 2] + list(range(n - 2)) + [n - 1]) if bounded else list(range(n))
    for i in order:
        height(i)
    return {labels[i]: h[i] for i in range(n)}


def random_scalar_g(rng: random.Random, P: Poset, zero_prob: float = 0.15) -> IncidenceFunction:
    """g[x,x] = 1, other values random nonnegative integers (degree 0)."""
    table = {}
    for x, y in P.pairs():
        if x != y:
            table[(x, y)] = 0 if rng.random() < zero_prob else rng.randint(1, 3)
    return scalar_function(P, table)


def random_kls_g(rng: random.Random, P: Poset) -> IncidenceFunction:
    """g with random polynomial values of degree < rho/2."""
    vals = {}
    for x, y in P.pairs():
        if x == y:
            vals[(x, y)] = Polynomial([1])
        else:
            top = (P.rho(x, y) - 1) // 2
            vals[(x, y)] = Polynomial([rng.randint(0, 2) for _ in range(top + 1)])
    return IncidenceFunction(P, vals)


def random_paving_antichain(rng: random.Random, P: Poset, d: int, attempts: int = 200):
    """Random antichain of elements with rank in (d, rank(P)) that covers every
    element of rank <= d; returns None if none is found."""
    n = P.rank()
    pool = [i for i in range(len(P)) if d < P.rank_of(i) < n]
    for _ in range(attempts):
        rng.shuffle(pool)
        chosen: list[int] = []
        for i in pool:
            if all(not P.leq(i, j) and not P.leq(j, i) for j in chosen):
                chosen.append(i)
            if satisfies_covering(P, d, [P.labels[c] for c in chosen]) and rng.random() < 0.5:
                break
        labels = [P.labels[c] for c in chosen]
        if satisfies_covering(P, d, labels):
            return labels
    return None


def paving_instances(rng: random.Random, count: int, max_n: int = 6) -> list[tuple[int, int, list]]:
    """(n, d, H) triples over boolean_algebra(n) satisfying the covering condition."""
    out = []
    seen = set()
    while len(out) < count:
        n = rng.randint(3, max_n)
        d = rng.randint(1, n - 2)
        P = boolean_algebra(n)
        H = random_paving_antichain(rng, P, d)
        if H is None:
            continue
        key = (n, d, frozenset(H))
        if key in seen:
            continue
        seen.add(key)
        out.append((n, d, H))
    return out
