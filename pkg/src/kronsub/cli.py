"""Command-line front end.

Exit codes: 0 yes / success, 1 no, 2 parse or scope error (one-line
diagnostic on stderr), 3 a constructed completion failed re-verification.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import criteria, oracle
from .completion import (complete, complete_rm, is_subpencil_cm, is_subpencil_rm, verify_completion,
                         verify_completion_rm)
from .errors import KronsubError, NotSubpencil
from .exactmat import Field
from .kroncore import PreinjInvariants, PreprojInvariants
from .pencil import minimal_column_indices, pencil_of_module
from .serialization import (completion_from_json, completion_to_json, dump_json, invariants_from_json,
                            invariants_to_json, load_json, pencil_from_json, pencil_to_json, witness_to_json)

YES, NO, ERROR, VERIFY_FAILED = 0, 1, 2, 3


def _pencil(path):
    return pencil_from_json(load_json(path))


def _preinj(path):
    inv = invariants_from_json(load_json(path))
    if not isinstance(inv, PreinjInvariants):
        raise KronsubError(f"{path}: expected preinjective invariants")
    return inv


def _fmt_seq(seq) -> str:
    return "(" + ",".join(str(x) for x in seq) + ")"


def cmd_invariants(args) -> int:
    P = _pencil(args.pencil)
    inv = minimal_column_indices(P)
    eps = sorted(inv.epsilons())
    if args.json:
        print(json.dumps({"eps": eps, "mult": list(inv.mult)}))
    else:
        print("eps = {" + ",".join(map(str, eps)) + "}")
        print(f"module = {inv.notation()}")
    return YES


def cmd_check_mono(args) -> int:
    sub, sup = _preinj(args.sub), _preinj(args.sup)
    ok = criteria.mono_exists(sub, sup)
    if args.explain:
        for label, lhs, rhs in criteria.dominance_table(sub, sup):
            print(f"{label}: {lhs} <= {rhs}  {'ok' if lhs <= rhs else 'FAILS'}")
    print("yes" if ok else "no")
    return YES if ok else NO


def cmd_check_subpencil(args) -> int:
    sub, sup = _pencil(args.sub), _pencil(args.sup)
    w = (is_subpencil_rm if args.row_minimal else is_subpencil_cm)(sub, sup)
    if args.json:
        print(json.dumps({"subpencil": w is not None, "witness": witness_to_json(w) if w else None}))
    elif w is None:
        print("no")
    else:
        print("yes")
        print(f"b = {_fmt_seq(w.b_seq)}")
        print(f"L = {w.linking.notation()}")
        print(f"alpha = {w.alpha}")
        print(f"beta = {w.beta}")
    return YES if w is not None else NO


def cmd_complete(args) -> int:
    sub, sup = _pencil(args.sub), _pencil(args.sup)
    try:
        if args.row_minimal:
            r = complete_rm(sub, sup, args.seed)
            ok = verify_completion_rm(sub, sup, r)
        else:
            r = complete(sub, sup, args.seed)
            ok = verify_completion(sub, sup, r)
    except NotSubpencil as exc:
        print(f"no: {exc}")
        return NO
    if not ok:
        print("error: constructed completion failed verification; nothing written", file=sys.stderr)
        return VERIFY_FAILED
    dump_json(completion_to_json(r), args.out)
    print(f"verified completion written to {args.out}")
    return YES


def cmd_verify(args) -> int:
    sub, sup = _pencil(args.sub), _pencil(args.sup)
    r = completion_from_json(load_json(args.completion))
    ok = (verify_completion_rm if args.row_minimal else verify_completion)(sub, sup, r)
    print("valid" if ok else "invalid")
    return YES if ok else NO


def cmd_canonical(args) -> int:
    inv = invariants_from_json(load_json(args.inv))
    try:
        field = Field.from_name(args.field)
    except ValueError as exc:
        raise KronsubError(str(exc)) from None
    if isinstance(inv, PreprojInvariants):
        P = pencil_of_module(inv.dual(), field).T
    else:
        P = pencil_of_module(inv, field)
    dump_json(pencil_to_json(P), args.out)
    return YES


def cmd_oracle(args) -> int:
    a, c = _preinj(args.first), _preinj(args.second)
    if args.check == "mono":
        ok = oracle.mono_exists_bruteforce(a, c, args.p)
    elif args.check == "epi":
        ok = oracle.epi_exists_bruteforce(a, c, args.p, p0_kernel=True)
    elif args.check == "subfactor":
        ok = oracle.subfactor_bruteforce_matrix(a, c, args.p)
    else:
        ok = oracle.linking_system_feasible(a, c)
    print("yes" if ok else "no")
    return YES if ok else NO


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kronsub", description="Subpencils of pencils with column minimal indices.")
    sp = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sp.add_parser("invariants", help="minimal column indices of a pencil")
    p.add_argument("pencil")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sp.add_parser("check-mono", help="is there a monomorphism between two preinjectives?")
    p.add_argument("sub")
    p.add_argument("sup")
    p.add_argument("--explain", action="store_true", help="print the inequality table")
    p.set_defaults(func=cmd_check_mono)

    p = sp.add_parser("check-subpencil", help="decide the subpencil relation")
    p.add_argument("sub")
    p.add_argument("sup")
    p.add_argument("--row-minimal", action="store_true", help="pencils with row minimal indices only")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_subpencil)

    p = sp.add_parser("complete", help="construct and verify completion blocks")
    p.add_argument("sub")
    p.add_argument("sup")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--row-minimal", action="store_true")
    p.set_defaults(func=cmd_complete)

    p = sp.add_parser("verify", help="check a completion file")
    p.add_argument("sub")
    p.add_argument("sup")
    p.add_argument("completion")
    p.add_argument("--row-minimal", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sp.add_parser("canonical", help="canonical pencil of an invariants file")
    p.add_argument("inv")
    p.add_argument("--out", required=True)
    p.add_argument("--field", default="Q")
    p.set_defaults(func=cmd_canonical)

    p = sp.add_parser("oracle", help=argparse.SUPPRESS)
    p.add_argument("check", choices=["mono", "epi", "subfactor", "integer"])
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--p", type=int, default=2)
    p.set_defaults(func=cmd_oracle)
    # keep the audit command out of the usage listing
    sp._choices_actions = [a for a in sp._choices_actions if a.dest != "oracle"]
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except KronsubError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


def main() -> None:
    sys.exit(run())
