"""JSON encoding and decoding of posets, matrices, series and results.

Rationals are strings in canonical ``p/q`` form; polynomials are lists of
coefficient strings, lowest degree first.  Decoding validates eagerly and
raises :class:`SchemaError` naming the failing field.
"""

from __future__ import annotations

import json
from typing import Any

from .ltmatrix import LTMatrix, pascal, identity, toeplitz as toeplitz_matrix, gaussian
from .poly import Polynomial, GammaVector
from .poset import (Poset, PairRanks, boolean_algebra, chain, partition_lattice, subspace_lattice,
                    paving_extension, dual, truncate, augment_poset)
from .ring import format_rational, parse_rational
from .toeplitz import TruncatedSeries, PFData, pf_series


class SchemaError(ValueError):
    """Input does not match the expected JSON layout."""

    def __init__(self, field: str, message: str):
        super().__init__("%s: %s" % (field, message))
        self.field = field


# -- scalars and polynomials -------------------------------------------------------------


def encode_rational(c) -> str:
    return format_rational(c)


def decode_rational(v, field: str):
    try:
        return parse_rational(v)
    except ValueError as e:
        raise SchemaError(field, str(e)) from None


def encode_poly(p: Polynomial) -> list[str]:
    return [format_rational(c) for c in p.coeffs] if not p.is_zero() else ["0"]


def decode_poly(v, field: str = "polynomial") -> Polynomial:
    if not isinstance(v, list):
        raise SchemaError(field, "expected a list of coefficients")
    return Polynomial([decode_rational(c, "%s[%d]" % (field, i)) for i, c in enumerate(v)])


def encode_gamma(g: GammaVector) -> list[str]:
    return [format_rational(c) for c in g.entries]


def dumps(doc: Any) -> str:
    """Deterministic rendering: sorted keys, fixed separators, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# -- matrices -------------------------------------------------------------------------------


def encode_matrix(R: LTMatrix) -> dict:
    return {"rows": [[format_rational(c) for c in row] for row in R.rows]}


def _expect(doc, key, kind, field=None):
    field = field or key
    if key not in doc:
        raise SchemaError(field, "missing")
    v = doc[key]
    if kind is int:
        if not isinstance(v, int) or isinstance(v, bool):
            raise SchemaError(field, "expected an integer")
    elif not isinstance(v, kind):
        raise SchemaError(field, "expected %s" % getattr(kind, "__name__", kind))
    return v


def decode_matrix(doc) -> LTMatrix:
    """``{"rows": [...]}`` or ``{"named": "pascal"|"identity"|"gaussian"|"toeplitz", ...}``."""
    if not isinstance(doc, dict):
        raise SchemaError("matrix", "expected an object")
    if "rows" in doc:
        rows = _expect(doc, "rows", list)
        out = []
        for n, row in enumerate(rows):
            if not isinstance(row, list):
                raise SchemaError("rows[%d]" % n, "expected a list")
            if len(row) != n + 1:
                raise SchemaError("rows[%d]" % n, "expected %d entries, got %d" % (n + 1, len(row)))
            out.append([decode_rational(c, "rows[%d][%d]" % (n, k)) for k, c in enumerate(row)])
        return LTMatrix(out)
    if "named" in doc:
        name = _expect(doc, "named", str)
        N = _expect(doc, "N", int)
        if N < 0:
            raise SchemaError("N", "must be >= 0")
        if name == "pascal":
            return pascal(N)
        if name == "identity":
            return identity(N)
        if name == "gaussian":
            return gaussian(N, decode_rational(doc.get("q", "1"), "q"))
        if name == "toeplitz":
            a = [decode_rational(c, "a[%d]" % i) for i, c in enumerate(_expect(doc, "a", list))]
            return toeplitz_matrix(a, N)
        raise SchemaError("named", "unknown matrix %r" % name)
    raise SchemaError("matrix", "need 'rows' or 'named'")


# -- posets ---------------------------------------------------------------------------------


def _label_key(lab):
    if isinstance(lab, frozenset):
        return sorted(_label_key(x) for x in lab)
    if isinstance(lab, tuple):
        return [_label_key(x) for x in lab]
    return lab


def encode_label(lab) -> str:
    if isinstance(lab, str):
        return lab
    if isinstance(lab, frozenset):
        return "{" + ",".join(encode_label(x) for x in sorted(lab, key=lambda x: json.dumps(_label_key(x), default=str))) + "}"
    if isinstance(lab, tuple):
        return "(" + ",".join(encode_label(x) for x in lab) + ")"
    return str(lab)


def encode_poset(P: Poset) -> dict:
    labels = [encode_label(lab) for lab in P.labels]
    rel = [[i, j] for i, j in P.covers()]
    ranks = {"%d,%d" % (i, j): P.rho(i, j) for i, j in P.relation_pairs()}
    return {"labels": labels, "relations": rel, "weak_rank": ranks}


_CONSTRUCTORS = {"boolean_algebra", "chain", "partition_lattice", "subspace_lattice", "paving"}


def _construct(spec) -> Poset:
    if not isinstance(spec, dict):
        raise SchemaError("constructor", "expected an object")
    name = _expect(spec, "name", str, "constructor.name")
    if name not in _CONSTRUCTORS:
        raise SchemaError("constructor.name", "unknown constructor %r" % name)
    n = _expect(spec, "n", int, "constructor.n")
    if n < 0:
        raise SchemaError("constructor.n", "must be >= 0")
    if name == "boolean_algebra":
        return boolean_algebra(n)
    if name == "chain":
        return chain(n)
    if name == "partition_lattice":
        return partition_lattice(n)
    if name == "subspace_lattice":
        return subspace_lattice(n, _expect(spec, "q", int, "constructor.q"))
    d = _expect(spec, "d", int, "constructor.d")
    H = _expect(spec, "H", list, "constructor.H")
    P = boolean_algebra(n)
    hyper = []
    for i, h in enumerate(H):
        if not isinstance(h, list) or not all(isinstance(x, int) for x in h):
            raise SchemaError("constructor.H[%d]" % i, "expected a list of integers")
        hyper.append(frozenset(h))
    return paving_extension(P, d, hyper)


def decode_poset(doc) -> Poset:
    """``{"constructor": {...}, "transform": [...]}`` or explicit
    ``{"labels": [...], "relations": [[i, j], ...], "weak_rank": ...}``.

    ``weak_rank`` is "graded" (default), ``{label: height}``, or
    ``{"i,j": rank}`` over all relation pairs.
    """
    if not isinstance(doc, dict):
        raise SchemaError("poset", "expected an object")
    if "constructor" in doc:
        P = _construct(doc["constructor"])
    else:
        labels = _expect(doc, "labels", list)
        for i, lab in enumerate(labels):
            if not isinstance(lab, (str, int)) or isinstance(lab, bool):
                raise SchemaError("labels[%d]" % i, "expected a string or integer")
        rel = doc.get("relations", [])
        if not isinstance(rel, list):
            raise SchemaError("relations", "expected a list")
        pairs = []
        for i, r in enumerate(rel):
            if not (isinstance(r, list) and len(r) == 2 and all(isinstance(x, int) for x in r)):
                raise SchemaError("relations[%d]" % i, "expected a pair of indices")
            pairs.append(tuple(r))
        wr = doc.get("weak_rank", "graded")
        if wr == "graded":
            rank = "graded"
        elif isinstance(wr, dict) and all("," in k for k in wr):
            rank = PairRanks()
            for k, v in wr.items():
                try:
                    i, j = (int(x) for x in k.split(","))
                except ValueError:
                    raise SchemaError("weak_rank", "bad pair key %r" % k) from None
                if not isinstance(v, int):
                    raise SchemaError("weak_rank[%s]" % k, "expected an integer")
                rank[(i, j)] = v
        elif isinstance(wr, dict):
            for k, v in wr.items():
                if not isinstance(v, int):
                    raise SchemaError("weak_rank[%s]" % k, "expected an integer")
            rank = dict(wr)
        else:
            raise SchemaError("weak_rank", "expected 'graded' or an object")
        P = Poset(labels, pairs, rank)
    for i, step in enumerate(doc.get("transform", [])):
        if step == "dual":
            P = dual(P)
        elif step == "truncate":
            P = truncate(P)
        elif step == "augment":
            P = augment_poset(P)
        else:
            raise SchemaError("transform[%d]" % i, "unknown transform %r" % step)
    return P


def decode_g_table(doc, P: Poset) -> dict:
    """``{"i,j": value}`` over index pairs; values are rationals (scalar g)
    or coefficient lists."""
    if not isinstance(doc, dict):
        raise SchemaError("g", "expected an object")
    out = {}
    for k, v in doc.items():
        try:
            i, j = (int(x) for x in k.split(","))
        except ValueError:
            raise SchemaError("g", "bad pair key %r" % k) from None
        if not (0 <= i < len(P) and 0 <= j < len(P)):
            raise SchemaError("g[%s]" % k, "index out of range")
        out[(i, j)] = decode_poly(v, "g[%s]" % k) if isinstance(v, list) else \
            Polynomial([decode_rational(v, "g[%s]" % k)])
    return out


# -- series ---------------------------------------------------------------------------------


def decode_series(doc, default_order: int = 10):
    """Returns ("series", TruncatedSeries) | ("binomial", B) | ("sheffer", (B, C))."""
    if not isinstance(doc, dict):
        raise SchemaError("series", "expected an object")
    N = doc.get("N", default_order)
    if not isinstance(N, int) or isinstance(N, bool) or N < 0:
        raise SchemaError("N", "expected a nonnegative integer")
    if "series" in doc:
        coeffs = _expect(doc, "series", list)
        a = [decode_rational(c, "series[%d]" % i) for i, c in enumerate(coeffs)]
        if not a:
            raise SchemaError("series", "empty")
        return "series", TruncatedSeries(a, N)
    if "pf" in doc:
        p = doc["pf"]
        if not isinstance(p, dict):
            raise SchemaError("pf", "expected an object")
        data = PFData(
            gamma=decode_rational(p.get("gamma", "0"), "pf.gamma"),
            alphas=tuple(decode_rational(c, "pf.alphas") for c in p.get("alphas", [])),
            betas=tuple(decode_rational(c, "pf.betas") for c in p.get("betas", [])),
        )
        return "series", pf_series(data, N)
    if "binomial" in doc:
        B = [decode_rational(c, "binomial[%d]" % i) for i, c in enumerate(_expect(doc, "binomial", list))]
        return "binomial", B
    if "sheffer" in doc:
        s = doc["sheffer"]
        if not isinstance(s, dict):
            raise SchemaError("sheffer", "expected an object")
        B = [decode_rational(c, "sheffer.B") for c in _expect(s, "B", list, "sheffer.B")]
        C = [decode_rational(c, "sheffer.C") for c in _expect(s, "C", list, "sheffer.C")]
        return "sheffer", (B, C)
    raise SchemaError("series", "need one of 'series', 'pf', 'binomial', 'sheffer'")


def decode_family(doc: dict) -> dict:
    """Inverse of the family encoding used by the CLI (for round trips)."""
    return {k: [decode_poly(p, "%s[%d]" % (k, i)) for i, p in enumerate(doc[k])]
            for k in ("H", "d", "G", "A") if k in doc}


def encode_family(H, d, G, A) -> dict:
    return {"H": [encode_poly(p) for p in H], "d": [encode_poly(p) for p in d],
            "G": [encode_poly(p) for p in G], "A": [encode_poly(p) for p in A]}
