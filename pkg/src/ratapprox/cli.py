"""Command-line front end: ``ratapprox {decompose,oracle,moments,sweep,verify}``.

Exit codes: 0 success, 2 when the theorem search finds nothing, 1 on bad
input or configuration.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .arith import parse_rational
from .decompose import NotFound, ProblemSpec, decompose, verify
from .moments import moment_sweep, reports_to_csv
from .oracle import OracleCapExceeded, best_approx
from .serialize import from_json, to_json
from .sweep import run_sweep, sweep_to_csv

EXIT_OK, EXIT_ERROR, EXIT_NOT_FOUND = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ratapprox", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=("json", "csv"), default=None)
        sp.add_argument("--out", default="-", help="output path (default stdout)")

    d = sub.add_parser("decompose", help="approximate a/q by n fractions")
    d.add_argument("--a", type=int, required=True)
    d.add_argument("--q", type=int, required=True)
    d.add_argument("--Q", type=int, required=True)
    d.add_argument("--n", type=int, default=3, choices=(3, 4))
    d.add_argument("--c", type=_rational, default=Fraction(2))
    d.add_argument("--mode", choices=("theorem", "auto", "oracle-fallback"), default="theorem")
    d.add_argument("--epsilon", type=_rational, default=Fraction(1, 10))
    common(d)

    o = sub.add_parser("oracle", help="best n-term approximation with denominators <= D")
    o.add_argument("--a", type=int, required=True)
    o.add_argument("--q", type=int, required=True)
    o.add_argument("--n", type=int, default=3, choices=(2, 3, 4, 5))
    o.add_argument("--D", type=int, required=True)
    common(o)

    m = sub.add_parser("moments", help="second moment of product residues")
    m.add_argument("--q", type=_int_list, required=True, help="modulus or comma list")
    m.add_argument("--X", type=_int_list, default=None,
                   help="explicit set (default: coprime integers up to q^(2/3))")
    m.add_argument("--Y", type=int, default=None, help="window length (default q^(2/3))")
    m.add_argument("--Z", type=int, default=0)
    common(m)

    s = sub.add_parser("sweep", help="seeded random sweep of the engine")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--q-min", type=int, default=1000)
    s.add_argument("--q-max", type=int, default=10000)
    s.add_argument("--exponent", type=_rational, default=Fraction(11, 5))
    s.add_argument("--n", type=int, default=3, choices=(3, 4))
    s.add_argument("--c", type=_rational, default=Fraction(2))
    s.add_argument("--mode", choices=("theorem", "auto"), default="theorem")
    common(s)

    v = sub.add_parser("verify", help="recheck a decomposition JSON document")
    v.add_argument("--in", dest="infile", default="-", help="input path (default stdin)")
    v.add_argument("--epsilon", type=_rational, default=Fraction(1, 10))
    common(v)
    return p


def _decompose(args) -> tuple[int, str]:
    if args.format == "csv":
        raise UsageError("decompose only emits json")
    spec = ProblemSpec.create(args.a, args.q, args.Q, args.n, args.c, args.mode, args.epsilon)
    res = decompose(spec)
    return (EXIT_NOT_FOUND if isinstance(res, NotFound) else EXIT_OK), to_json(res)


def _oracle(args) -> tuple[int, str]:
    res = best_approx(args.a, args.q, args.n, args.D)
    if args.format == "csv":
        witness = " ".join(f"{a}/{d}" for a, d in res.witness)
        text = ("a,q,n,D,error_num,error_den,witness,enumerated\n"
                f"{args.a},{args.q},{args.n},{args.D},{res.best_error.numerator},"
                f"{res.best_error.denominator},{witness},{res.enumerated}\n")
        return EXIT_OK, text
    payload = {
        "a": str(args.a), "q": str(args.q), "n": args.n, "D": str(args.D),
        "best_error": {"num": str(res.best_error.numerator), "den": str(res.best_error.denominator)},
        "witness": [{"num": str(a), "den": str(d)} for a, d in res.witness],
        "enumerated": res.enumerated,
    }
    return EXIT_OK, json.dumps(payload, indent=2) + "\n"


def _moments(args) -> tuple[int, str]:
    reports = moment_sweep(args.q, args.X, args.Y, args.Z)
    if args.format == "json":
        return EXIT_OK, json.dumps([r.row() for r in reports], indent=2) + "\n"
    return EXIT_OK, reports_to_csv(reports)


def _sweep(args) -> tuple[int, str]:
    if args.format == "json":
        raise UsageError("sweep only emits csv")
    if args.count < 0:
        raise UsageError("--count must be >= 0")
    rows = run_sweep(args.seed, args.count, args.q_min, args.q_max, args.exponent,
                     args.n, args.c, args.mode)
    return EXIT_OK, sweep_to_csv(rows, args.n)


def _verify(args) -> tuple[int, str]:
    if args.infile == "-":
        text = sys.stdin.read()
    else:
        with open(args.infile, encoding="utf-8") as fh:
            text = fh.read()
    d = from_json(text, epsilon=args.epsilon)
    report = verify(d)
    return (EXIT_OK if report.passed else EXIT_ERROR), json.dumps(report.as_dict(), indent=2) + "\n"


COMMANDS = {
    "decompose": _decompose,
    "oracle": _oracle,
    "moments": _moments,
    "sweep": _sweep,
    "verify": _verify,
}


def run(argv: list[str] | None = None, stdout=None) -> int:
    """Parse ``argv``, dispatch, write output; returns the exit status."""
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        status, text = COMMANDS[args.command](args)
    except (UsageError, ValueError, OracleCapExceeded, KeyError, OSError) as exc:
        print(f"ratapprox: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.out == "-":
        stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return status


def main() -> None:
    sys.exit(run())
