"""grouplat command line: construct groups, compute intervals and marks, run verification suites."""
from __future__ import annotations

import argparse
import json
import sys

from . import lattice, product
from .factory import parse_spec
from .group import BudgetError, GroupError, canonical_sort
from .paritylaws import LawError
from .verification import SUITES, Budget, parity_witness, predict, verify_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _group(spec: str):
    try:
        return parse_spec(spec).group
    except GroupError as exc:
        raise InputError(str(exc)) from None


def _budget(args) -> Budget:
    return Budget(args.element_budget, args.order_budget)


def cmd_construct(args) -> tuple:
    try:
        C = parse_spec(args.spec)
    except GroupError as exc:
        raise InputError(str(exc)) from None
    rec = C.to_json()
    if args.emit == "json":
        return _dump(rec), EXIT_OK
    if args.emit == "dot":
        raise InputError("construct has no DOT form; use json or text")
    return f"{C.name}: degree {C.degree}, order {C.order()}\n", EXIT_OK


def cmd_interval(args) -> tuple:
    G, H = _group(args.ambient), _group(args.sub)
    if H.degree != G.degree or not H.is_subgroup_of(G):
        raise InputError("--sub is not a subgroup of --ambient")
    I = lattice.interval(H, G, args.element_budget)
    if args.emit == "dot":
        return I.to_dot(), EXIT_OK
    if args.emit == "json":
        return _dump(I.to_json()), EXIT_OK
    lines = [f"{len(I)} subgroups, shape {I.shape}"]
    lines += [f"  n{i}: order {N.order()}" for i, N in enumerate(I.nodes)]
    lines += [f"  n{i} < n{j}" for i, j in I.hasse]
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_hm(args) -> tuple:
    G, K, L = _group(args.ambient), _group(args.k), _group(args.l)
    for X in (K, L):
        if X.degree != G.degree or not X.is_subgroup_of(G):
            raise InputError("K and L must be subgroups of the ambient group")
    rec = {"hm_K_L": lattice.hm(K, L, G), "hm_L_K": lattice.hm(L, K, G),
           "conjugates_K": len(lattice.conjugates(K, G)), "conjugates_L": len(lattice.conjugates(L, G))}
    rec["identity_holds"] = rec["conjugates_L"] * rec["hm_K_L"] == rec["conjugates_K"] * rec["hm_L_K"]
    code = EXIT_OK if rec["identity_holds"] else EXIT_FAIL
    if args.emit == "json":
        return _dump(rec), code
    return "".join(f"{k}: {v}\n" for k, v in sorted(rec.items())), code


def cmd_parity(args) -> tuple:
    params = [p.strip() for p in args.params.split(",") if p.strip()]
    try:
        if args.witness:
            rec = parity_witness(args.law, params)
            rec["agree"] = rec["predicted"] == rec["witness"]
        else:
            rec = {"predicted": predict(args.law, params)}
    except (KeyError, IndexError, ValueError, LawError, GroupError) as exc:
        raise InputError(f"bad parity request: {exc}") from None
    rec.update(law=args.law, params=params)
    code = EXIT_FAIL if rec.get("agree") is False else EXIT_OK
    if args.emit == "json":
        return _dump(rec), code
    word = {0: "even", 1: "odd"}
    line = f"{args.law}({','.join(params)}): {word[rec['predicted']]}"
    if args.witness:
        line += f"; witness {word[rec['witness']]} ({'agrees' if rec['agree'] else 'DISAGREES'})"
    return line + "\n", code


def cmd_goursat(args) -> tuple:
    L, R = _group(args.left), _group(args.right)
    n = L.degree
    if args.op == "maximals":
        found = product.product_maximals(L, R)
        rec = {"left": args.left, "right": args.right, "count": len(found),
               "maximals": [{"order": M.order(), "datum": product.goursat_decompose(M, n).to_json()}
                            for M in canonical_sort(found)]}
        code = EXIT_OK
    else:
        if not (args.inner and args.outer):
            raise InputError(f"--op {args.op} needs --inner and --outer")
        P = product.direct_product(L, R)
        inner = P if args.inner == "full" else _group(args.inner)
        outer = P if args.outer == "full" else _group(args.outer)
        for X in (inner, outer):
            if X.degree != P.degree or not X.is_subgroup_of(P):
                raise InputError("subgroups must live in the product on left points then right points")
        if not inner.is_subgroup_of(outer):
            raise InputError("--inner is not contained in --outer")
        if args.op == "classify":
            flag, case = product.goursat_is_maximal(inner, outer, n)
            rec = {"type": product.interval_type(inner, outer, n), "maximal": flag, "case": case,
                   "skeleton": product.skeleton_orders(inner, outer, n).to_json()}
        else:
            rec = product.shortcut_novelty(inner, outer, n).to_json()
        code = EXIT_OK
    if args.emit == "json":
        return _dump(rec), code
    return "".join(f"{k}: {json.dumps(v, sort_keys=True)}\n" for k, v in sorted(rec.items())), code


def cmd_verify(args) -> tuple:
    only = set(args.only.split(",")) if args.only else None
    try:
        report = verify_suite(args.suite, _budget(args), only)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from None
    if args.emit == "json":
        return _dump(report.to_json()), report.exit_code
    if args.emit == "dot":
        raise InputError("verify has no DOT form; use json or text")
    return report.to_text(), report.exit_code


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="grouplat", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--emit", choices=("json", "dot", "text"), default="text")
    common.add_argument("--element-budget", type=int, default=lattice.ELEMENT_BUDGET)
    common.add_argument("--order-budget", type=int, default=Budget().order_budget)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a group from a spec")
    p.add_argument("spec")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("interval", parents=[common], help="overgroup lattice of --sub inside --ambient")
    p.add_argument("--ambient", required=True)
    p.add_argument("--sub", required=True)
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("hm", parents=[common], help="homogeneous marks of K and L")
    p.add_argument("--ambient", required=True)
    p.add_argument("--k", required=True)
    p.add_argument("--l", required=True)
    p.set_defaults(func=cmd_hm)

    p = sub.add_parser("parity", parents=[common], help="closed-form parity laws")
    p.add_argument("--law", required=True, choices=("diagonal", "powerset", "frobenius", "affine",
                                                      "projective", "wreath"))
    p.add_argument("--params", required=True)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_parity)

    p = sub.add_parser("goursat", parents=[common], help="subgroups of a direct product")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--op", required=True, choices=("maximals", "classify", "shortcut"))
    p.add_argument("--inner")
    p.add_argument("--outer")
    p.set_defaults(func=cmd_goursat)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", help=", ".join(sorted(SUITES)))
    p.add_argument("--only", help="comma-separated check ids")
    p.set_defaults(func=cmd_verify)
    return ap


def run(argv=None) -> tuple:
    """(output text, exit code) without touching the process streams."""
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return "", EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        return f"error: {exc}\n", EXIT_INPUT
    except BudgetError as exc:
        return f"error: budget exceeded: {exc}\n", EXIT_INPUT
    except GroupError as exc:
        return f"error: {exc}\n", EXIT_INPUT


def main(argv=None) -> int:
    out, code = run(argv)
    stream = sys.stderr if out.startswith("error:") else sys.stdout
    stream.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
