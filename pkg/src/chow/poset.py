"""Finite weakly ranked posets.

A :class:`Poset` stores its order relation fully closed (as bitmasks over
element indices) together with a weak rank function ``rho(x, y)`` defined
on comparable pairs.  Elements carry arbitrary hashable labels; all
algorithms work with integer indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter
from typing import Callable, Hashable, Iterable, Mapping, Sequence


class PosetError(ValueError):
    """Raised when an order relation or weak rank violates its axioms."""


class PairRanks(dict):
    """Weak rank given explicitly on index pairs: ``{(i, j): rho}``."""


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Poset:
    """Finite poset with a weak rank function.

    Parameters
    ----------
    labels:
        element names, one per index.
    relations:
        pairs ``(i, j)`` of indices meaning ``i <= j``; the reflexive
        transitive closure is computed.
    weak_rank:
        ``"graded"`` (derive ranks from longest chains and validate),
        a mapping from labels to heights (``rho(x, y) = h[y] - h[x]``), or
        a :class:`PairRanks` mapping index pairs ``(i, j)`` to ranks.
    """

    def __init__(self, labels: Sequence[Hashable], relations: Iterable[tuple[int, int]] = (),
                 weak_rank="graded", *, _up: list[int] | None = None):
        self.labels = tuple(labels)
        n = len(self.labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != n:
            raise PosetError("duplicate element labels")
        if _up is None:
            _up = self._close(n, relations)
        self.up = list(_up)
        self.down = [0] * n
        for i in range(n):
            for j in _bits(self.up[i]):
                self.down[j] |= 1 << i
        self.order = self._linear_extension()
        self._rho: dict[tuple[int, int], int] = {}
        self._assign_rank(weak_rank)

    # -- construction helpers ----------------------------------------------

    @staticmethod
    def _close(n: int, relations) -> list[int]:
        succ: list[set[int]] = [set() for _ in range(n)]
        for i, j in relations:
            if not (0 <= i < n and 0 <= j < n):
                raise PosetError("relation (%r, %r) refers to a missing element" % (i, j))
            if i != j:
                succ[i].add(j)
        graph = {j: {i for i in range(n) if j in succ[i]} for j in range(n)}
        try:
            topo = list(TopologicalSorter(graph).static_order())
        except CycleError as exc:
            raise PosetError("relation is not antisymmetric (cycle through %r)" % (exc.args[1],)) from None
        up = [1 << i for i in range(n)]
        for i in reversed(topo):
            for j in succ[i]:
                up[i] |= up[j]
        return up

    @classmethod
    def from_order(cls, labels: Sequence[Hashable], leq: Callable[[Hashable, Hashable], bool],
                   weak_rank="graded") -> Poset:
        """Build from a predicate that is already reflexive and transitive."""
        labels = list(labels)
        up = []
        for a in labels:
            mask = 0
            for j, b in enumerate(labels):
                if leq(a, b):
                    mask |= 1 << j
            up.append(mask)
        for i in range(len(labels)):
            if not (up[i] >> i) & 1:
                raise PosetError("order predicate is not reflexive at %r" % (labels[i],))
            for j in _bits(up[i]):
                if i != j and (up[j] >> i) & 1:
                    raise PosetError("order predicate is not antisymmetric")
                if up[j] & ~up[i]:
                    raise PosetError("order predicate is not transitive")
        return cls(labels, weak_rank=weak_rank, _up=up)

    def _linear_extension(self) -> list[int]:
        n = len(self.labels)
        key = [bin(self.down[i]).count("1") for i in range(n)]
        return sorted(range(n), key=lambda i: (key[i], i))

    def _assign_rank(self, weak_rank):
        n = len(self.labels)
        if isinstance(weak_rank, str):
            if weak_rank != "graded":
                raise PosetError("unknown weak rank mode %r" % weak_rank)
            self._rank_from_chains()
        elif isinstance(weak_rank, PairRanks):
            for i in range(n):
                for j in _bits(self.up[i]):
                    if i != j and (i, j) not in weak_rank:
                        raise PosetError("weak rank missing for pair (%d, %d)" % (i, j))
                    self._rho[(i, j)] = 0 if i == j else int(weak_rank[(i, j)])
        elif isinstance(weak_rank, Mapping):
            heights = {}
            for lab, h in weak_rank.items():
                if lab not in self._index:
                    raise PosetError("weak rank given for unknown element %r" % (lab,))
                heights[self._index[lab]] = h
            if len(heights) != n:
                raise PosetError("weak rank heights missing for some elements")
            for i in range(n):
                for j in _bits(self.up[i]):
                    self._rho[(i, j)] = heights[j] - heights[i]
        else:
            raise PosetError("weak_rank must be 'graded' or a mapping")
        self._validate_rank()

    def _rank_from_chains(self):
        n = len(self.labels)
        for i in range(n):
            longest = {i: 0}
            for j in self.order:
                if j == i or not (self.up[i] >> j) & 1:
                    continue
                best = 0
                for k in _bits(self.down[j] & self.up[i]):
                    if k != j:
                        best = max(best, longest[k] + 1)
                longest[j] = best
            for j, v in longest.items():
                self._rho[(i, j)] = v

    def _validate_rank(self):
        n = len(self.labels)
        for i in range(n):
            for j in _bits(self.up[i]):
                r = self._rho[(i, j)]
                if i == j and r != 0:
                    raise PosetError("weak rank axiom: rho(x,x) must be 0 at %r" % (self.labels[i],))
                if i != j and r <= 0:
                    raise PosetError("weak rank axiom: rho(x,y) > 0 for x < y fails at (%r, %r)"
                                     % (self.labels[i], self.labels[j]))
                for k in _bits(self.up[i] & self.down[j]):
                    if self._rho[(i, k)] + self._rho[(k, j)] != r:
                        raise PosetError(
                            "weak rank additivity fails: rho(%r,%r) != rho(%r,%r) + rho(%r,%r)"
                            % (self.labels[i], self.labels[j], self.labels[i], self.labels[k],
                               self.labels[k], self.labels[j]))

    # -- basic queries --------------------------------------------------------

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return "Poset(%d elements)" % len(self.labels)

    def index(self, label) -> int:
        return self._index[label]

    def leq(self, i: int, j: int) -> bool:
        return bool((self.up[i] >> j) & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    def rho(self, i: int, j: int) -> int:
        try:
            return self._rho[(i, j)]
        except KeyError:
            raise PosetError("rho(%r, %r) undefined: elements not comparable"
                             % (self.labels[i], self.labels[j])) from None

    def pairs(self) -> list[tuple[int, int]]:
        """All comparable pairs (i, j) with i <= j."""
        return [(i, j) for i in self.order for j in self.order if self.leq(i, j)]

    def upset(self, i: int) -> list[int]:
        """Elements >= i in a linear extension order."""
        return [j for j in self.order if (self.up[i] >> j) & 1]

    def interval(self, i: int, j: int) -> list[int]:
        return [k for k in self.order if (self.up[i] >> k) & 1 and (self.down[j] >> k) & 1]

    def minimal(self) -> list[int]:
        return [i for i in range(len(self)) if self.down[i] == 1 << i]

    def maximal(self) -> list[int]:
        return [i for i in range(len(self)) if self.up[i] == 1 << i]

    def bottom(self) -> int | None:
        m = self.minimal()
        return m[0] if len(m) == 1 else None

    def top(self) -> int | None:
        m = self.maximal()
        return m[0] if len(m) == 1 else None

    def is_bounded(self) -> bool:
        return len(self) > 0 and self.bottom() is not None and self.top() is not None

    def rank(self) -> int:
        """rho(0, 1) for a bounded poset."""
        if not self.is_bounded():
            raise PosetError("rank is defined for bounded posets only")
        return self.rho(self.bottom(), self.top())

    def rank_of(self, i: int) -> int:
        """rho(0, x) for posets with a least element."""
        b = self.bottom()
        if b is None:
            raise PosetError("poset has no least element")
        return self.rho(b, i)

    def is_graded(self) -> bool:
        """Every cover relation has weak rank 1."""
        return all(self._rho[c] == 1 for c in self.covers())

    def covers(self) -> list[tuple[int, int]]:
        out = []
        for i in range(len(self)):
            for j in _bits(self.up[i]):
                if i != j and (self.up[i] & self.down[j]) == (1 << i) | (1 << j):
                    out.append((i, j))
        return out

    def relation_pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(len(self)) for j in _bits(self.up[i]) if i != j]

    def rank_table(self) -> dict[tuple[int, int], int]:
        return dict(self._rho)

    # -- derived posets ----------------------------------------------------------

    def subposet(self, indices: Sequence[int], rank: Mapping[tuple[int, int], int] | None = None) -> Poset:
        """Induced subposet; weak rank restricted unless ``rank`` overrides
        values (keys are pairs of *original* indices)."""
        indices = list(indices)
        pos = {old: new for new, old in enumerate(indices)}
        up = []
        for old in indices:
            mask = 0
            for o2 in _bits(self.up[old]):
                if o2 in pos:
                    mask |= 1 << pos[o2]
            up.append(mask)
        table = {}
        for a in indices:
            for b in indices:
                if self.leq(a, b):
                    key = (a, b)
                    val = rank[key] if rank is not None and key in rank else self._rho[key]
                    table[(pos[a], pos[b])] = val
        return Poset([self.labels[i] for i in indices], weak_rank=PairRanks(table), _up=up)

    def interval_poset(self, i: int, j: int) -> Poset:
        return self.subposet(self.interval(i, j))

    def relabel(self, f: Callable[[Hashable], Hashable]) -> Poset:
        return Poset([f(x) for x in self.labels], weak_rank=PairRanks(self._rho), _up=self.up)

    def isomorphic_data(self) -> tuple:
        """Label-free invariant used in tests (sorted rank/size profile)."""
        prof = sorted((self.rho(i, j), len(self.interval(i, j))) for i, j in self.pairs())
        return tuple(prof)

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        if set(self.labels) != set(other.labels):
            return False
        for a in self.labels:
            for b in self.labels:
                i, j = self.index(a), self.index(b)
                k, m = other.index(a), other.index(b)
                if self.leq(i, j) != other.leq(k, m):
                    return False
                if self.leq(i, j) and self.rho(i, j) != other.rho(k, m):
                    return False
        return True

    __hash__ = None  # mutable-free but equality is structural


# -- transformations -------------------------------------------------------------

AUG_BOTTOM = "0aug"


def truncate(P: Poset) -> Poset:
    """Remove the coatoms of a bounded poset and lower the top's rank by one."""
    if not P.is_bounded():
        raise PosetError("truncation needs a bounded poset")
    top = P.top()
    r = P.rank()
    if r < 2:
        raise PosetError("truncation needs rank >= 2, got %d" % r)
    keep = [i for i in P.order if i == top or P.rho(i, top) != 1]
    table = {}
    for a in keep:
        if a != top:
            table[(a, top)] = P.rho(a, top) - 1
    return P.subposet(keep, rank=table)


def augment_poset(P: Poset, label=AUG_BOTTOM) -> Poset:
    """Adjoin a new least element; rho(new, y) = rho(old bottom, y) + 1."""
    b = P.bottom()
    if b is None:
        raise PosetError("augmentation needs a least element")
    if label in P._index:
        raise PosetError("label %r already used" % (label,))
    n = len(P)
    labels = (label,) + P.labels
    up = [(1 << (n + 1)) - 1] + [m << 1 for m in P.up]
    table = PairRanks()
    for (i, j), v in P.rank_table().items():
        table[(i + 1, j + 1)] = v
    table[(0, 0)] = 0
    for j in range(n):
        table[(0, j + 1)] = P.rho(b, j) + 1
    return Poset(labels, weak_rank=table, _up=up)


def rank_select(P: Poset, S: Iterable[int], weak: bool = False) -> Poset:
    """Elements of rank in S + {0, r}.

    By default the result is regraded so that an element whose rank is the
    i-th smallest value of S + {0, r} gets rank i.  With ``weak=True`` the
    original rank differences are kept instead.
    """
    if not P.is_bounded():
        raise PosetError("rank selection needs a bounded poset")
    r = P.rank()
    S = sorted(set(S))
    if any(s < 1 or s > r - 1 for s in S):
        raise PosetError("rank set %r not inside [1, %d]" % (S, r - 1))
    levels = sorted(set(S) | {0, r})
    keep = [i for i in P.order if P.rank_of(i) in levels]
    if weak:
        return P.subposet(keep)
    pos = {v: k for k, v in enumerate(levels)}
    table = {}
    for a in keep:
        for b in keep:
            if P.leq(a, b):
                table[(a, b)] = pos[P.rank_of(b)] - pos[P.rank_of(a)]
    return P.subposet(keep, rank=table)


def dual(P: Poset) -> Poset:
    table = PairRanks({(j, i): v for (i, j), v in P.rank_table().items()})
    return Poset(P.labels, weak_rank=table, _up=list(P.down))


@dataclass
class UniformityVerdict:
    """Outcome of the weak-rank uniformity test.

    ``matrix`` holds r_{n,k} = #{z <= x : rho(z) = k} for rho(x) = n when
    the poset is uniform; otherwise ``witness`` names two elements of the
    same rank whose counts differ at rank ``k``.
    """

    uniform: bool
    matrix: object = None
    witness: tuple | None = None

    def __bool__(self):
        return self.uniform


def rank_counts(P: Poset) -> tuple[int, dict[int, list[int]]]:
    b = P.bottom()
    if b is None:
        raise PosetError("weak-rank uniformity needs a least element")
    top = max(P.rank_of(i) for i in range(len(P)))
    counts = {}
    for x in range(len(P)):
        row = [0] * (P.rank_of(x) + 1)
        for z in _bits(P.down[x]):
            row[P.rank_of(z)] += 1
        counts[x] = row
    return top, counts


def is_weak_rank_uniform(P: Poset) -> UniformityVerdict:
    from .ltmatrix import LTMatrix

    top, counts = rank_counts(P)
    rows: list[list[int] | None] = [None] * (top + 1)
    owner: list[int | None] = [None] * (top + 1)
    for x in P.order:
        n = P.rank_of(x)
        if rows[n] is None:
            rows[n], owner[n] = counts[x], x
        elif rows[n] != counts[x]:
            k = next(k for k in range(n + 1) if rows[n][k] != counts[x][k])
            return UniformityVerdict(False, None, (P.labels[owner[n]], P.labels[x], k))
    for n, row in enumerate(rows):
        if row is None:
            return UniformityVerdict(False, None, ("missing-rank", n, None))
    return UniformityVerdict(True, LTMatrix(rows), None)


# -- constructors --------------------------------------------------------------------


def chain(n: int) -> Poset:
    """The chain 0 < 1 < ... < n (rank n)."""
    return Poset.from_order(list(range(n + 1)), lambda a, b: a <= b)


def boolean_algebra(n: int) -> Poset:
    ground = range(1, n + 1)
    labels = [frozenset(c) for k in range(n + 1) for c in itertools.combinations(ground, k)]
    return Poset.from_order(labels, lambda a, b: a <= b)


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, int(q ** 0.5) + 1))


def subspace_lattice(n: int, q: int) -> Poset:
    """Subspaces of F_q^n ordered by inclusion (q prime)."""
    if not _is_prime(q):
        raise PosetError("subspace_lattice supports prime q only, got %r" % (q,))
    vectors = list(itertools.product(range(q), repeat=n))
    zero = tuple([0] * n)

    def span_with(space: frozenset, v) -> frozenset:
        out = set(space)
        for c in range(1, q):
            cv = tuple((c * a) % q for a in v)
            for w in space:
                out.add(tuple((x + y) % q for x, y in zip(w, cv)))
        return frozenset(out)

    levels = [{frozenset([zero])}]
    for _ in range(n):
        nxt = set()
        for space in levels[-1]:
            for v in vectors:
                if v not in space:
                    nxt.add(span_with(space, v))
        levels.append(nxt)
    labels = []
    for lev in levels:
        labels.extend(sorted(lev, key=lambda s: sorted(s)))
    return Poset.from_order(labels, lambda a, b: a <= b)


def set_partitions(items: Sequence) -> list[tuple[tuple, ...]]:
    items = list(items)
    if not items:
        return [()]
    first, rest = items[0], items[1:]
    out = []
    for part in set_partitions(rest):
        out.append(((first,),) + part)
        for i in range(len(part)):
            merged = tuple(sorted((first,) + part[i]))
            out.append(tuple(sorted(part[:i] + (merged,) + part[i + 1:])))
    return [tuple(sorted(p)) for p in out]


def partition_lattice(n: int) -> Poset:
    """Set partitions of [n] ordered by refinement (finer below)."""
    labels = sorted(set(set_partitions(range(1, n + 1))), key=lambda p: (-len(p), p))

    def refines(a, b):
        return all(any(set(block) <= set(big) for big in b) for block in a)

    return Poset.from_order(labels, refines)


def paving_extension(P: Poset, d: int, hyperplanes: Iterable) -> Poset:
    """P(d, H): elements of rank <= d, the antichain H at rank d+1, and a top."""
    if not P.is_bounded():
        raise PosetError("paving extension needs a bounded poset")
    n = P.rank()
    if not 0 <= d < n:
        raise PosetError("need 0 <= d < rank")
    H = [P.index(h) for h in hyperplanes]
    if len(set(H)) != len(H):
        raise PosetError("repeated element in H")
    for h in H:
        if not d < P.rank_of(h) < n:
            raise PosetError("element %r of H has rank %d outside (%d, %d)"
                             % (P.labels[h], P.rank_of(h), d, n))
    for a, b in itertools.combinations(H, 2):
        if P.leq(a, b) or P.leq(b, a):
            raise PosetError("H is not an antichain: %r and %r are comparable" % (P.labels[a], P.labels[b]))
    low = [i for i in P.order if P.rank_of(i) <= d]
    top_label = "top"
    while top_label in P._index:
        top_label += "'"
    old = low + H
    labels = [P.labels[i] for i in old] + [top_label]
    m = len(old)
    height = {}
    for k, i in enumerate(old):
        height[k] = P.rank_of(i) if k < len(low) else d + 1
    height[m] = d + 2
    up = []
    for k, i in enumerate(old):
        mask = 1 << m
        for k2, j in enumerate(old):
            if P.leq(i, j):
                mask |= 1 << k2
        up.append(mask)
    up.append(1 << m)
    table = PairRanks()
    for k in range(m + 1):
        for k2 in _bits(up[k]):
            table[(k, k2)] = height[k2] - height[k]
    return Poset(labels, weak_rank=table, _up=up)


def satisfies_covering(P: Poset, d: int, hyperplanes: Iterable) -> bool:
    """Every element of rank <= d lies below some element of H."""
    H = [P.index(h) for h in hyperplanes]
    return all(any(P.leq(i, h) for h in H) for i in range(len(P)) if P.rank_of(i) <= d)
