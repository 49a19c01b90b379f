"""Command-line front end: ``phl <verb> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on a usage
error. Every verb supports ``--format text|json|csv``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import fqsym
from .algebra import coproduct_q, product_q
from .combo import Combo
from .pairing import DegreeBoundError, Pairing, gram, pair, max_degree_cap
from .poset import enumerate_posets, format_poset, parse_poset
from .qpoly import VARIABLES, PolyParseError, poly_canonical_string
from .verify import SUITES, verify

FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _poset_arg(text: str):
    try:
        return parse_poset(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _assignment(text: str) -> tuple[str, Fraction]:
    name, sep, value = text.partition("=")
    name = name.strip()
    if not sep or name not in VARIABLES:
        raise argparse.ArgumentTypeError(f"expected VAR=VALUE with VAR in {', '.join(VARIABLES)}: {text!r}")
    try:
        return name, Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {value!r}") from None


def _nonnegative(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS, help="output format")

    parser = _Parser(prog="phl", description="Deformed Hopf algebras of plane posets.", parents=[fmt])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("enum", parents=[fmt], help="list the plane posets of a degree")
    p.add_argument("n", type=_nonnegative)
    p.add_argument("--count", action="store_true", help="print only the number of posets")

    p = sub.add_parser("product", parents=[fmt], help="deformed product of two posets")
    p.add_argument("P", type=_poset_arg)
    p.add_argument("Q", type=_poset_arg)

    p = sub.add_parser("coproduct", parents=[fmt], help="deformed coproduct of a poset")
    p.add_argument("P", type=_poset_arg)

    p = sub.add_parser("pair", parents=[fmt], help="evaluate one of the two pairings")
    p.add_argument("--which", choices=[w.value for w in Pairing], default="first")
    p.add_argument("P", type=_poset_arg)
    p.add_argument("Q", type=_poset_arg)

    p = sub.add_parser("gram", parents=[fmt], help="Gram matrix of a pairing in one degree")
    p.add_argument("--pairing", choices=[w.value for w in Pairing], default="first")
    p.add_argument("--degree", type=_nonnegative, required=True)
    p.add_argument("--set", type=_assignment, action="append", default=[], metavar="VAR=VALUE",
                   help="specialize a variable (repeatable)")

    p = sub.add_parser("theta", parents=[fmt], help="sum of linear extensions of a poset")
    p.add_argument("P", type=_poset_arg)

    p = sub.add_parser("verify", parents=[fmt], help="run the identity checks")
    p.add_argument("suite_pos", nargs="?", choices=SUITES + ("all",), metavar="SUITE")
    p.add_argument("--suite", choices=SUITES + ("all",))
    p.add_argument("--max-degree", type=_nonnegative, default=4)
    return parser


def _combo_out(x: Combo, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(x.to_json_obj(), sort_keys=True)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        rows = x.to_json_obj()["terms"]
        width = 1
        if rows and isinstance(rows[0]["basis"], list):
            width = len(rows[0]["basis"])
        header = ["basis"] if width == 1 else [f"factor{i + 1}" for i in range(width)]
        w.writerow(header + ["coeff"])
        for t in rows:
            basis = t["basis"] if isinstance(t["basis"], list) else [t["basis"]]
            w.writerow(basis + [t["coeff"]])
        return buf.getvalue().rstrip("\n")
    return str(x)


def _scalar_out(key: str, value: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({key: value})
    if fmt == "csv":
        return f"{key}\n{value}"
    return value


def _run(args: argparse.Namespace, out) -> int:
    fmt = getattr(args, "format", "text")
    verb = args.verb
    if verb == "enum":
        posets = enumerate_posets(args.n)
        if args.count:
            print(_scalar_out("count", str(len(posets)), fmt), file=out)
        elif fmt == "json":
            print(json.dumps({"degree": args.n, "posets": [format_poset(p) for p in posets]}), file=out)
        else:
            lines = (["poset"] if fmt == "csv" else []) + [format_poset(p) for p in posets]
            print("\n".join(lines), file=out)
    elif verb == "product":
        print(_combo_out(product_q(args.P, args.Q), fmt), file=out)
    elif verb == "coproduct":
        print(_combo_out(coproduct_q(args.P), fmt), file=out)
    elif verb == "pair":
        if args.P.n != args.Q.n:
            raise UsageError("pair: posets must have the same degree")
        value = poly_canonical_string(pair(args.P, args.Q, args.which))
        print(_scalar_out("value", value, fmt), file=out)
    elif verb == "gram":
        bound = max_degree_cap(6)
        if args.degree > bound:
            raise UsageError(f"gram: degree {args.degree} exceeds the bound {bound}")
        g = gram(args.degree, args.pairing).specialize(dict(args.set))
        text = {"json": g.to_json, "csv": g.to_csv, "text": g.to_text}[fmt]()
        print(text.rstrip("\n"), file=out)
    elif verb == "theta":
        print(_combo_out(fqsym.theta(args.P), fmt), file=out)
    elif verb == "verify":
        if args.suite and args.suite_pos and args.suite != args.suite_pos:
            raise UsageError("verify: conflicting suite names")
        suite = args.suite or args.suite_pos
        if suite is None:
            raise UsageError("verify: a suite is required (--suite NAME)")
        report = verify(suite, args.max_degree)
        if fmt == "json":
            print(report.to_json(), file=out)
        elif fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["check", "status", "cases", "inputs", "lhs", "rhs"])
            for c in report.checks:
                ce = c.counterexample or {}
                w.writerow([f"{c.suite}.{c.name}", c.status, c.cases,
                            json.dumps(ce.get("inputs")) if ce else "", ce.get("lhs", ""), ce.get("rhs", "")])
            print(buf.getvalue().rstrip("\n"), file=out)
        else:
            print(report.to_text(timings=False), file=out)
        return 0 if report.passed else 1
    return 0


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
        return _run(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, PolyParseError, DegreeBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Run the CLI in-process and return ``(status, stdout text)``."""
    buf = io.StringIO()
    status = main(argv, buf)
    return status, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
