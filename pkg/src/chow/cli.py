"""Command-line interface: ``chow <subcommand> INPUT [options]``.

INPUT is a path to a JSON file or an inline JSON document.  Output is JSON
on stdout (or ``--out``).  Exit status: 0 success, 2 schema violation,
3 precondition violation, 4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .incidence import (KLSError, IncidenceFunction, augment, chow_pair, aug_pair, chow_via_chains,
                        chow_via_chains_general, chow_via_kernel, zeta)
from .ltmatrix import DiagonalError, LTMatrix, chow_family, chow_family_by_deletion, chow_via_subsets, toeplitz
from .minors import SizeBoundError, dense_det, gamma_chow, is_tn
from .poly import DegreeError, NotPalindromicError, Polynomial, gamma_extract
from .poset import PosetError
from .realroot import interlaces, is_real_rooted, isolate_real_roots
from .resolution import INCONCLUSIVE, Resolution, from_lambda, resolve, verify_resolution
from .ring import format_rational
from .serialize import (SchemaError, decode_g_table, decode_matrix, decode_poly, decode_poset, decode_rational,
                        decode_series, dumps, encode_family, encode_gamma, encode_poly)
from .toeplitz import (SeriesError, binomial_matrix, binomial_series, chow_series, sheffer_matrix,
                       sheffer_series)

EXIT_SCHEMA = 2
EXIT_PRECONDITION = 3
EXIT_ORACLE = 4
ORACLE_DEFAULT_MAX = 6
DEFAULT_MAX_N = 12

SUBCOMMANDS = ("poset", "matrix", "toeplitz", "check-tn", "resolve", "gamma", "certify")


class PreconditionError(ValueError):
    pass


class OracleMismatch(AssertionError):
    pass


def max_n() -> int:
    raw = os.environ.get("CHOW_MAX_N", str(DEFAULT_MAX_N))
    try:
        return int(raw)
    except ValueError:
        raise PreconditionError("CHOW_MAX_N must be an integer, got %r" % raw) from None


def _cap(n: int, what: str):
    limit = max_n()
    if n > limit:
        raise PreconditionError("%s %d exceeds CHOW_MAX_N=%d" % (what, n, limit))


def load_input(source: str):
    text = source
    if not source.lstrip().startswith(("{", "[")):
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise SchemaError("input", "cannot read %s: %s" % (source, e.strerror)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError("input", "invalid JSON: %s" % e.msg) from None


def _use_oracle(args, n: int) -> bool:
    if args.oracle is None:
        return n <= ORACLE_DEFAULT_MAX
    return args.oracle


def _check(cond: bool, message: str):
    if not cond:
        raise OracleMismatch(message)


def _meta(oracle: bool, routes: list[str], **extra) -> dict:
    out = {"oracle": oracle, "oracle_routes": routes if oracle else []}
    out.update(extra)
    return out


def _matrix_input(doc, args) -> LTMatrix:
    if isinstance(doc, dict) and "matrix" in doc:
        doc = doc["matrix"]
    R = decode_matrix(doc)
    if args.n is not None:
        if args.n < 0 or args.n > R.N:
            raise PreconditionError("--n %d outside 0..%d" % (args.n, R.N))
        R = R.truncated(args.n)
    _cap(R.N, "matrix size N")
    return R


# -- subcommands -------------------------------------------------------------------------


def cmd_matrix(doc, args) -> dict:
    R = _matrix_input(doc, args)
    fam = chow_family(R)
    oracle = _use_oracle(args, R.N)
    if oracle:
        for n in range(R.N + 1):
            _check(chow_via_subsets(R, n) == fam.H[n], "subset-sum H_%d differs" % n)
        alt = chow_family_by_deletion(R)
        _check(alt == fam, "deletion/augmentation route differs")
    out = encode_family(fam.H, fam.d, fam.G, fam.A)
    out["meta"] = _meta(oracle, ["subset-sum", "deletion"], N=R.N)
    return out


def _poset_g(P, args, doc) -> IncidenceFunction:
    table = None
    if args.g:
        table = decode_g_table(load_input(args.g), P)
    elif isinstance(doc, dict) and "g" in doc:
        table = decode_g_table(doc["g"], P)
    if table is None:
        return zeta(P)
    vals = {}
    for x, y in P.pairs():
        vals[(x, y)] = table.get((x, y), Polynomial([1]))
    return IncidenceFunction(P, vals)


def _poset_input(doc):
    if isinstance(doc, dict) and "poset" in doc:
        inner = doc["poset"]
    else:
        inner = doc
    if isinstance(inner, dict) and isinstance(inner.get("constructor"), dict):
        n = inner["constructor"].get("n")
        if isinstance(n, int):
            _cap(n, "constructor size n")
    return decode_poset(inner)


def cmd_poset(doc, args) -> dict:
    P = _poset_input(doc)
    b, top = P.bottom(), P.top()
    if b is None or top is None:
        raise PreconditionError("poset must be bounded (least and greatest element)")
    _cap(P.rho(b, top), "poset rank")
    g = _poset_g(P, args, doc)
    H, d = chow_pair(g, [b])
    G, A = aug_pair(g, [b])
    oracle = _use_oracle(args, P.rho(b, top))
    routes = ["kernel-inversion", "chain-sum", "augmentation"]
    if oracle:
        K = chow_via_kernel(g, [b])
        _check(K.values[(b, top)] == H.values[(b, top)], "kernel route differs")
        chains = chow_via_chains(g, b, top) if g.is_scalar() else chow_via_chains_general(g, b, top)
        _check(chains == H.values[(b, top)], "chain-sum route differs")
        Q, gbar = augment(P, g)
        Haug, _ = chow_pair(gbar, [0])
        _check(Haug.values[(0, top + 1)] == G.values[(b, top)], "augmentation route differs")
    out = {
        "H": encode_poly(H.values[(b, top)]),
        "d": encode_poly(d.values[(b, top)]),
        "G": encode_poly(G.values[(b, top)]),
        "A": encode_poly(A.values[(b, top)]),
        "size": len(P),
        "rank": P.rho(b, top),
    }
    out["meta"] = _meta(oracle, routes)
    return out


def cmd_toeplitz(doc, args) -> dict:
    if not isinstance(doc, dict):
        raise SchemaError("series", "expected an object")
    if args.n is not None:
        doc = dict(doc, N=args.n)
    kind, value = decode_series(doc)
    if kind == "series":
        _cap(value.N, "series order")
        fam = chow_series(value)
        oracle_R = lambda: toeplitz(value.coeffs, value.N)
    elif kind == "binomial":
        _cap(len(value) - 1, "series order")
        fam = binomial_series(value)
        oracle_R = lambda: binomial_matrix(value)
    else:
        B, C = value
        _cap(len(B) - 1, "series order")
        fam = sheffer_series(B, C)
        oracle_R = lambda: sheffer_matrix(B, C)
    oracle = _use_oracle(args, fam.N)
    if oracle:
        m = chow_family(oracle_R())
        _check((m.H, m.d, m.G, m.A) == (fam.H, fam.D, fam.G, fam.A), "matrix recursion differs from series")
    out = encode_family(fam.H, fam.D, fam.G, fam.A)
    out["meta"] = _meta(oracle, ["matrix-recursion"], N=fam.N, input=kind)
    return out


def cmd_check_tn(doc, args) -> dict:
    R = _matrix_input(doc, args)
    v = is_tn(R)
    oracle = _use_oracle(args, R.N)
    out = {"tn": v.tn, "witness": None, "value": None}
    if not v.tn:
        rows, cols = v.witness
        out["witness"] = {"rows": rows, "cols": cols}
        out["value"] = format_rational(v.value)
        if oracle:
            dense = [[R[r, c] for c in cols] for r in rows]
            _check(dense_det(dense) == v.value, "witness minor differs under cofactor expansion")
    out["meta"] = _meta(oracle, ["cofactor-expansion"], N=R.N)
    return out


def _encode_lambda(lam):
    return [[format_rational(x) for x in row] for row in lam]


def cmd_resolve(doc, args) -> dict:
    R = _matrix_input(doc, args)
    oracle = _use_oracle(args, R.N)
    if isinstance(doc, dict) and "lambda" in doc:
        raw = doc["lambda"]
        if not isinstance(raw, list):
            raise SchemaError("lambda", "expected a list of rows")
        lam = [[decode_rational(x, "lambda[%d]" % n) for x in row] for n, row in enumerate(raw)]
        try:
            res = verify_resolution(R, lam)
        except ValueError as e:
            raise PreconditionError(str(e)) from None
        mode = "verify"
    else:
        res = resolve(R)
        mode = "greedy"
    out = {"mode": mode}
    if isinstance(res, Resolution):
        out["status"] = "resolved"
        out["lambda"] = _encode_lambda(res.lam)
        if oracle:
            _check(from_lambda(res.lam) == R, "matrix rebuilt from lambda differs")
    elif res == INCONCLUSIVE:
        out["status"] = INCONCLUSIVE
    else:
        out["status"] = "failed"
        out["failure"] = {"condition": res.condition, "n": res.n, "k": res.k}
    out["meta"] = _meta(oracle, ["rebuild-from-lambda"], N=R.N)
    return out


def cmd_gamma(doc, args) -> dict:
    if isinstance(doc, dict) and "matrix" in doc:
        doc = doc["matrix"]
    R = decode_matrix(doc)
    _cap(R.N, "matrix size N")
    n = R.N if args.n is None else args.n
    if not 0 <= n <= R.N:
        raise PreconditionError("--n %d outside 0..%d" % (n, R.N))
    g = gamma_chow(R, n, augmented=args.augmented)
    oracle = _use_oracle(args, n)
    if oracle:
        fam = chow_family(R.truncated(n))
        direct = gamma_extract(fam.G[n], n) if args.augmented else gamma_extract(fam.H[n], n - 1)
        _check(direct.entries == g.entries, "gamma from minors differs from direct extraction")
    out = {"gamma": encode_gamma(g), "n": n, "augmented": args.augmented}
    out["meta"] = _meta(oracle, ["palindromic-extraction"])
    return out


def _root_cert(p: Polynomial) -> dict:
    if p.is_zero():
        return {"real_rooted": True, "isolation": None}
    return {"real_rooted": is_real_rooted(p), "isolation": isolate_real_roots(p).to_json()}


def _pair_cert(name: str, p: Polynomial, q: Polynomial) -> dict:
    c = interlaces(p, q)
    return {"pair": name, "verdict": c.verdict, "witness": c.witness, "wronskian_sign": c.wronskian_sign}


def cmd_certify(doc, args) -> dict:
    if isinstance(doc, dict) and "polynomials" in doc:
        raw = doc["polynomials"]
        if not isinstance(raw, list):
            raise SchemaError("polynomials", "expected a list")
        polys = [decode_poly(p, "polynomials[%d]" % i) for i, p in enumerate(raw)]
        roots = [_root_cert(p) for p in polys]
        pairs = [_pair_cert("p%d<p%d" % (i, i + 1), a, b) for i, (a, b) in enumerate(zip(polys, polys[1:]))]
    else:
        R = _matrix_input(doc, args)
        fam = chow_family(R)
        roots = {k: [_root_cert(p) for p in getattr(fam, k)] for k in ("H", "d", "G", "A")}
        pairs = []
        for n in range(R.N + 1):
            pairs.append(_pair_cert("H_%d<d_%d" % (n, n), fam.H[n], fam.d[n]))
            pairs.append(_pair_cert("G_%d<A_%d" % (n, n), fam.G[n], fam.A[n]))
            if n < R.N:
                for k in ("H", "d", "G", "A"):
                    F = getattr(fam, k)
                    pairs.append(_pair_cert("%s_%d<%s_%d" % (k, n, k, n + 1), F[n], F[n + 1]))
    flat = roots if isinstance(roots, list) else [c for v in roots.values() for c in v]
    ok = all(c["real_rooted"] for c in flat) and all(p["verdict"] for p in pairs)
    return {"real_rooted": roots, "interlacing": pairs, "all_certified": ok,
            "meta": _meta(False, [], note="interlacing verdicts carry a Wronskian sign cross-check")}


HANDLERS = {
    "poset": cmd_poset,
    "matrix": cmd_matrix,
    "toeplitz": cmd_toeplitz,
    "check-tn": cmd_check_tn,
    "resolve": cmd_resolve,
    "gamma": cmd_gamma,
    "certify": cmd_certify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chow", description="Chow polynomials of posets, matrices and series.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", help="JSON file path or inline JSON document")
        p.add_argument("--n", type=int, default=None, help="index / truncation order")
        p.add_argument("--augmented", action="store_true", help="augmented gamma vector (G instead of H)")
        p.add_argument("--g", default=None, help="path or inline JSON for a g table (poset)")
        p.add_argument("--oracle", dest="oracle", action="store_true", default=None,
                       help="force the independent cross-check")
        p.add_argument("--no-oracle", dest="oracle", action="store_false", help="skip the cross-check")
        p.add_argument("--out", default=None, help="write JSON here instead of stdout")
    return parser


def _fail(code: int, kind: str, message: str) -> int:
    sys.stderr.write(dumps({"error": kind, "message": message}))
    return code


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = load_input(args.input)
        result = HANDLERS[args.command](doc, args)
    except SchemaError as e:
        return _fail(EXIT_SCHEMA, "schema", str(e))
    except OracleMismatch as e:
        return _fail(EXIT_ORACLE, "oracle-mismatch", str(e))
    except (PreconditionError, DiagonalError, PosetError, SeriesError, KLSError, SizeBoundError,
            DegreeError, NotPalindromicError, ZeroDivisionError, ArithmeticError) as e:
        return _fail(EXIT_PRECONDITION, "precondition", str(e))
    text = dumps(result)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
