"""Command-line front end.

Subcommands
-----------
verify-paper   run the built-in construction verification (K^2 = 3, H_1 = Z/2)
run FILE       execute a construction recipe and check its expect block
hj ...         continued-fraction / Wahl-chain utilities
snf FILE       Smith normal form of a matrix in the text exchange format

Exit codes: 0 success, 1 verification or expectation failure, 2 bad input.
JSON output serializes integers beyond 2^53 - 1 as decimal strings so no
consumer loses precision.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import construction, hj, recipe
from .recipe import RecipeError
from .zlinalg import IntMatrix, ZLinAlgError, snf

_SAFE_INT = 2 ** 53 - 1


def _jsonable(obj):
    """Recursively convert for emission; big integers become strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) <= _SAFE_INT else str(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return str(obj)


def _emit_json(data):
    print(json.dumps(_jsonable(data), indent=2))


def _read_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise RecipeError("cannot read %s: %s" % (path, exc)) from exc


def _parse_chain(text):
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise hj.HJError("chain must be a comma-separated list of integers,"
                         " got %r" % text) from None


def cmd_verify_paper(args) -> int:
    assignment = None
    if args.assignment:
        assignment = recipe.load_recipe(_read_file(args.assignment)).raw
    report = construction.verify_paper(assignment=assignment,
                                       all_solutions=args.all_solutions)
    if args.emit == "json":
        _emit_json(report.to_json_dict())
    else:
        print(report.to_text(quiet=args.quiet))
    return 0 if report.passed else 1


def cmd_run(args) -> int:
    report = recipe.run_recipe(_read_file(args.file))
    if args.emit == "json":
        _emit_json(report.to_json_dict())
    else:
        print(report.to_text(quiet=args.quiet))
    return 0 if report.passed else 1


def cmd_hj(args) -> int:
    if args.hj_command == "expand":
        chain = hj.hj_expand(args.p, args.q)
        data = {"p": args.p, "q": args.q, "chain": chain}
        text = " ".join(str(b) for b in chain)
    elif args.hj_command == "wahl":
        chain = hj.wahl_chain(args.n, args.a)
        data = {"n": args.n, "a": args.a, "chain": chain}
        text = " ".join(str(b) for b in chain)
    elif args.hj_command == "recognize":
        chain = _parse_chain(args.chain)
        w = hj.recognize_wahl(chain)
        f = hj.hj_value(chain)
        data = {"chain": chain, "p": f.p, "q": f.q,
                "wahl": None if w is None else {"n": w.n, "a": w.a}}
        text = "none" if w is None else "%d %d" % (w.n, w.a)
    else:  # meridians
        chain = _parse_chain(args.chain)
        m = hj.meridian_coefficients(chain)
        data = {"chain": chain, "coefficients": list(m.coefficients),
                "order": m.order}
        text = " ".join(str(c) for c in m.coefficients) + \
            "\norder %d" % m.order
    if args.emit == "json":
        _emit_json(data)
    else:
        print(text)
    return 0


def cmd_snf(args) -> int:
    m = IntMatrix.from_text(_read_file(args.file))
    res = snf(m)
    if args.emit == "json":
        _emit_json({"rows": m.rows, "cols": m.cols,
                    "diagonal": list(res.D.diagonal()),
                    "D": [list(r) for r in res.D.data],
                    "U": [list(r) for r in res.U.data],
                    "V": [list(r) for r in res.V.data]})
    else:
        print(" ".join(str(d) for d in res.D.diagonal()))
    return 0


def _add_emit(parser):
    parser.add_argument("--emit", choices=("text", "json"), default="text",
                        help="output format (default text)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratblow",
        description="Exact-arithmetic rational blow-down toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    vp = sub.add_parser("verify-paper",
                        help="verify the built-in construction "
                             "(K^2=3, e=9, H1=Z/2)")
    vp.add_argument("--assignment", metavar="FILE",
                    help="recipe file to verify instead of searching")
    vp.add_argument("--all-solutions", action="store_true",
                    help="enumerate every figure reconstruction and "
                         "require agreement")
    vp.add_argument("--quiet", action="store_true",
                    help="text mode: only print failures and the verdict")
    _add_emit(vp)
    vp.set_defaults(func=cmd_verify_paper)

    run = sub.add_parser("run", help="execute a construction recipe file")
    run.add_argument("file", metavar="FILE")
    run.add_argument("--quiet", action="store_true")
    _add_emit(run)
    run.set_defaults(func=cmd_run)

    hjp = sub.add_parser("hj", help="continued-fraction utilities")
    hjsub = hjp.add_subparsers(dest="hj_command", required=True)
    ex = hjsub.add_parser("expand", help="expand P/Q into its chain")
    ex.add_argument("p", type=int)
    ex.add_argument("q", type=int)
    wa = hjsub.add_parser("wahl", help="the chain of N^2/(N*A-1)")
    wa.add_argument("n", type=int)
    wa.add_argument("a", type=int)
    re_ = hjsub.add_parser("recognize",
                           help="recognize a chain as a Wahl chain")
    re_.add_argument("chain", help="comma-separated coefficients, e.g. 8,2,2,2,2")
    me = hjsub.add_parser("meridians",
                          help="meridian coefficients and boundary order")
    me.add_argument("chain", help="comma-separated coefficients")
    for p in (ex, wa, re_, me):
        _add_emit(p)
    hjp.set_defaults(func=cmd_hj)

    sn = sub.add_parser("snf", help="Smith normal form of a matrix file")
    sn.add_argument("file", metavar="FILE")
    _add_emit(sn)
    sn.set_defaults(func=cmd_snf)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (RecipeError, ZLinAlgError, hj.HJError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
