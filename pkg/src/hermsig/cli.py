"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 bad input or a refused
construction.
"""
from __future__ import annotations

import argparse
import json
import sys

from .constructions import (
    EXAMPLES,
    Certificate,
    Refusal,
    cyclotomic_factor,
    degree_bound,
    example_suite,
    format_table,
    gap_family,
    lemma31_suite,
    prop41,
    prop42,
    shift_construct,
    table_metadata,
    target_family,
    theorem41_construct,
    theorem82_construct,
    whitney,
)
from .expr import ParseError, format_poly, parse_expression
from .hermitian_form import AmbientError, inertia
from .polyring import HermitianSymmetryError, HermPoly, RealPoly, hyperquadric, moment_lift, sign_counts
from .quotient import divide_by_r, projective_degree
from .scalar import Q, fmt
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def _as_herm(P):
    return moment_lift(P) if isinstance(P, RealPoly) else P


# -- single computations ------------------------------------------------------------------
def cmd_signature(args) -> int:
    P = parse_expression(args.expr)
    res = inertia(_as_herm(P), args.degree, args.vars, witness=False)
    payload = {"expression": format_poly(P), "signature": list(res.signature), "ambient": list(res.ambient)}
    text = f"s = ({res.A}, {res.B})"
    if isinstance(P, RealPoly):
        payload["sign_counts"] = list(sign_counts(P))
        text += f"   S(P) = {sign_counts(P)}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_inertia(args) -> int:
    P = parse_expression(args.expr)
    res = inertia(_as_herm(P), args.degree, args.vars, witness=True)
    ok = res.verify_witness()
    payload = {
        "expression": format_poly(P),
        "inertia": list(res.triple),
        "ambient": {"degree": res.ambient[0], "vars": res.ambient[1]},
        "witness_verified": ok,
        "witness_sha256": res.digest(),
    }
    _emit(args, payload, f"in = {res.triple}  in V({res.ambient[0]}, {res.ambient[1]})  witness {'ok' if ok else 'FAILED'}")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_product(args) -> int:
    p, q = (_as_herm(parse_expression(e)) for e in (args.left, args.right))
    n = max(p.nvars, q.nvars)
    p, q = p.pad(n), q.pad(n)
    pq = p * q
    sig = {name: inertia(x, witness=False).signature for name, x in (("left", p), ("right", q), ("product", pq))}
    payload = {"product": format_poly(pq), **{k: list(v) for k, v in sig.items()}}
    text = f"{format_poly(pq)}\ns(left) = {sig['left']}  s(right) = {sig['right']}  s(product) = {sig['product']}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_divide(args) -> int:
    p = _as_herm(parse_expression(args.expr, nvars=args.vars))
    w = divide_by_r(p, var=args.var)
    ok = w.verify()
    payload = {
        "member": w.member,
        "quotient": format_poly(w.quotient),
        "remainder": format_poly(w.remainder),
        "divisor": format_poly(w.divisor),
        "witness_verified": ok,
    }
    text = f"member: {w.member}\nquotient: {payload['quotient']}\nremainder: {payload['remainder']}"
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_projdeg(args) -> int:
    p = _as_herm(parse_expression(args.expr))
    D, res = projective_degree(p)
    ok = res.verify()
    h = HermPoly._raw(p.nvars, {(a, (0,) * p.nvars): c for a, c in res.h.items()})
    payload = {
        "projective_degree": D,
        "h": format_poly(h),
        "reduced": format_poly(res.reduced),
        "reduced_bidegree": list(res.bidegree),
        "verified": ok,
    }
    _emit(args, payload, f"D = {D}\nh = {payload['h']}\nreduced: {payload['reduced']}")
    return EXIT_OK if ok else EXIT_FAILED


# -- constructions ----------------------------------------------------------------------------
def _lambda(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("lambda needs three comma-separated numbers")
    return tuple(Q(x) for x in parts)


def _build(args) -> list:
    name, ps = args.name, args.params
    ints = lambda k: [int(x) for x in ps[:k]] + [None] * (k - len(ps))  # noqa: E731
    if name == "lemma31":
        return [lemma31_suite()]
    if name == "cyclotomic":
        return [cyclotomic_factor(ints(1)[0] or 4)]
    if name == "whitney":
        return [whitney(ints(1)[0] or 2)]
    if name == "gap":
        return [gap_family(ints(1)[0] or 3)]
    if name == "prop41":
        return [prop41(ints(1)[0] or 3)]
    if name == "prop42":
        sel = ints(1)[0]
        return [prop42(sel)] if sel else [prop42(s) for s in range(1, 5)]
    if name == "thm41":
        A, B = ints(2)
        if A is None or B is None:
            raise ValueError("thm41 needs A and B")
        return [theorem41_construct(A, B)]
    if name == "example":
        if not ps or ps[0] not in EXAMPLES:
            raise ValueError(f"example needs one of {', '.join(EXAMPLES)}")
        kw = {}
        if ps[0] == "4.1" and args.eps is not None:
            kw["eps"] = Q(args.eps)
        if ps[0] == "6.1" and args.m is not None:
            kw["m"] = args.m
        if ps[0] == "7.1" and args.lam:
            kw["lams"] = args.lam
        return [example_suite(ps[0], **kw)]
    if name == "shift":
        base = parse_expression(args.base) if args.base else hyperquadric(args.n)
        return [shift_construct(_as_herm(base), -1 if args.sign == "-" else 1, args.k)]
    if name == "target":
        n, N = ints(2)
        if None in (n, N):
            raise ValueError("target needs n N")
        return [target_family(n, N)]
    if name == "thm82":
        n, A, B = ints(3)
        if None in (n, A, B):
            raise ValueError("thm82 needs n A B")
        return [theorem82_construct(n, A, B, degree_boost=args.boost)]
    raise ValueError(f"unknown construction {name!r}")


def _report(args, certs: list, polynomials: bool = True) -> int:
    failed = [c for c in certs if c.status == "failed"]
    if args.json:
        body = [c.to_dict(polynomials) for c in certs]
        print(json.dumps(body[0] if len(body) == 1 else body, sort_keys=True, indent=2))
    else:
        for c in certs:
            _print_cert(c, polynomials)
    return EXIT_FAILED if failed else EXIT_OK


def _print_cert(c: Certificate, polynomials: bool) -> None:
    print(f"{c.construction} {json.dumps(c.to_dict(False)['params'], sort_keys=True)}: {c.status}")
    if c.chosen:
        print("  chosen: " + ", ".join(f"{k}={fmt(v) if not isinstance(v, (list, tuple, str, bool, int)) else v}" for k, v in c.chosen.items()))
    if polynomials and "result" in c.polynomials:
        print(f"  result: {format_poly(c.polynomials['result'])}")
    for cl in c.claims:
        mark = "ok " if cl.status == "verified" else "BAD"
        print(f"  [{mark}] {cl.kind} {cl.subject}: expected {cl.expected}, computed {cl.computed}")


def cmd_construct(args) -> int:
    return _report(args, _build(args))


def cmd_verify(args) -> int:
    certs = run_suite(args.suite, jobs=args.jobs)
    failed = [c for c in certs if c.status == "failed"]
    claims = sum(len(c.claims) for c in certs)
    bad = sum(len(c.failures()) for c in certs)
    if args.json:
        payload = {
            "suite": args.suite,
            "certificates": len(certs),
            "claims": claims,
            "failed_claims": bad,
            "status": "verified" if not failed else "failed",
            "failures": [{"construction": c.construction, "params": c.to_dict(False)["params"],
                          "claims": [x.to_dict() for x in c.failures()]} for c in failed],
        }
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for c in certs:
            print(f"{c.status:9} {c.construction} {json.dumps(c.to_dict(False)['params'], sort_keys=True)} ({len(c.claims)} claims)")
            for x in c.failures():
                print(f"          FAILED {x.kind} {x.subject}: expected {x.expected}, computed {x.computed}")
        print(f"suite {args.suite}: {len(certs)} certificates, {claims} claims, {bad} failed")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_table(args) -> int:
    meta = table_metadata(args.n)
    bad = [cell for cell in meta["cells"].values() if cell.get("status") == "failed"]
    if args.json:
        payload = dict(meta)
        payload["cells"] = {f"{A},{B}": cell for (A, B), cell in sorted(meta["cells"].items())}
        payload["grid"] = [[meta["cells"][(A, B)]["value"] for A in meta["columns"]] + ["..."] for B in meta["rows"]]
        print(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))
    else:
        print(format_table(meta))
    return EXIT_FAILED if bad else EXIT_OK


def cmd_bound(args) -> int:
    b = degree_bound(args.n, args.target)
    _emit(args, {"n": args.n, "N": args.target, "bound": fmt(b)}, fmt(b))
    return EXIT_OK


# -- parser -------------------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hermsig", description=__doc__)
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    # repeated on every verb; SUPPRESS keeps a flag given before the verb
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("signature", parents=[common], help="signature pair s(p)")
    p.add_argument("expr")
    p.add_argument("--degree", type=int)
    p.add_argument("--vars", type=int)
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("inertia", parents=[common], help="inertia triple in a chosen ambient space")
    p.add_argument("expr")
    p.add_argument("--degree", type=int)
    p.add_argument("--vars", type=int)
    p.set_defaults(func=cmd_inertia)

    p = sub.add_parser("product", parents=[common], help="product and the three signature pairs")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("divide-r", parents=[common], help="division by the hyperquadric form")
    p.add_argument("expr")
    p.add_argument("--vars", type=int)
    p.add_argument("--var", type=int, default=0, help="index of the eliminated variable (0-based)")
    p.set_defaults(func=cmd_divide)

    p = sub.add_parser("projdeg", parents=[common], help="projective degree")
    p.add_argument("expr")
    p.set_defaults(func=cmd_projdeg)

    p = sub.add_parser("construct", parents=[common], help="build and verify a named construction")
    p.add_argument("name", choices=["lemma31", "cyclotomic", "whitney", "gap", "prop41", "prop42",
                                    "thm41", "example", "shift", "target", "thm82"])
    p.add_argument("params", nargs="*")
    p.add_argument("--eps", help="epsilon for example 4.1")
    p.add_argument("--m", type=int, help="m for example 6.1")
    p.add_argument("--lambda", dest="lam", type=_lambda, action="append", help="A,B,C for example 7.1")
    p.add_argument("--base", help="base polynomial for shift (default: r)")
    p.add_argument("--n", type=int, default=2, help="dimension for shift with the default base")
    p.add_argument("--sign", choices=["+", "-"], default="+")
    p.add_argument("--k", type=int)
    p.add_argument("--boost", type=int, default=0, help="degree boost for thm82")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify-paper", parents=[common], help="re-verify every construction")
    p.add_argument("--suite", default="all", choices=["all", *SUITES])
    p.add_argument("--jobs", type=int, default=None, help="worker processes for --suite all (1 = serial)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[common], help="two-variable status table")
    p.add_argument("--n", type=int, default=2)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("bound", parents=[common], help="degree estimate N(N-1)/(2(2n-3))")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--target", type=int, required=True)
    p.set_defaults(func=cmd_bound)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Refusal as exc:
        if args.json:
            print(json.dumps({"status": "refused", "reason": exc.reason}, sort_keys=True, indent=2))
        else:
            print(f"refused: {exc.reason}", file=sys.stderr)
        return EXIT_INPUT
    except (ParseError, HermitianSymmetryError, AmbientError, ValueError) as exc:
        if args.json:
            print(json.dumps({"status": "error", "error": str(exc)}, sort_keys=True, indent=2))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
