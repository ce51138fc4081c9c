"""Command-line front end.

Exit status: 0 when the result is certified (or a known closed form),
2 when it is not, 1 on usage or resource errors. Data goes to stdout,
diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import bounds, ledger, secant, toric
from .engine import (DEFAULT_SIZE_CAP, DEFAULT_TRIALS, ResourceLimitError, Verdict,
                     compute_dimension, lambda_double_points, planes_fatpoint,
                     plain_double_points, veronese_double_points, veronese_fatpoint)
from .modlinalg import DEFAULT_PRIME, PrimeField

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name}={raw!r} is not an integer") from None


def _d_range(text: str):
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if lo < 1 or hi < lo:
            raise argparse.ArgumentTypeError(f"bad range {text!r}")
        return range(lo, hi + 1)
    return range(int(text), int(text) + 1)


def build_parser(env: dict) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--seed", type=int, default=env["seed"])
    common.add_argument("--prime", type=int, default=env["prime"])
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    common.add_argument("--size-cap", type=int, default=env["size_cap"])
    common.add_argument("--format", choices=("json", "csv", "svg"), default="json")

    p = _Parser(prog="secpowers", allow_abbrev=False,
                description="Dimensions of linear systems and secant varieties of powers of forms.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("dim", parents=[common], allow_abbrev=False, help="dimension of a linear system")
    s.add_argument("--system", required=True, choices=("V2h", "AH", "Lambda", "Va", "Pia"))
    for flag in ("--n", "--d", "--k", "--h", "--a", "--N"):
        s.add_argument(flag, type=int)
    s.add_argument("--placement", choices=("coordinate", "random"), default="coordinate")

    s = sub.add_parser("secant", parents=[common], allow_abbrev=False, help="Terracini secant dimension")
    for flag in ("--n", "--d", "--k", "--h"):
        s.add_argument(flag, type=int, required=True)
    s.add_argument("--cross-check", action="store_true")

    s = sub.add_parser("bounds", parents=[common], allow_abbrev=False, help="bounds for one (n, d, k)")
    for flag in ("--n", "--d", "--k"):
        s.add_argument(flag, type=int, required=True)

    s = sub.add_parser("toric", parents=[common], allow_abbrev=False, help="alcove triangulation")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--emit", choices=("json", "svg"), default="json")
    s.add_argument("--validate", action="store_true")

    s = sub.add_parser("ledger", parents=[common], allow_abbrev=False, help="degeneration ledger")
    for flag in ("--n", "--d", "--k", "--h"):
        s.add_argument(flag, type=int, required=True)
    s.add_argument("--bruteforce", action="store_true")

    s = sub.add_parser("report", parents=[common], allow_abbrev=False, help="bound comparison table")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--d", type=_d_range, required=True, help="a range such as 2..10")
    return p


def _need(args, *names):
    missing = [f"--{x}" for x in names if getattr(args, x) is None]
    if missing:
        raise UsageError(f"--system {args.system} needs {' '.join(missing)}")


def _field(args, degree: int) -> PrimeField:
    try:
        field = PrimeField(args.prime)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if field.p <= degree:
        raise UsageError(f"--prime {field.p} must exceed dk = {degree}")
    return field


def _flat_csv(record: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(record)
    w.writerow(json.dumps(v) if isinstance(v, (list, dict)) else v for v in record.values())
    return buf.getvalue()


def _emit(record: dict, fmt: str) -> str:
    if fmt == "csv":
        return _flat_csv(record)
    if fmt == "svg":
        raise UsageError("svg output is only available for toric and report")
    return json.dumps(record, indent=2) + "\n"


def cmd_dim(args, out):
    system = args.system
    if system == "V2h":
        _need(args, "n", "d", "k", "h")
        spec, degree = veronese_double_points(args.n, args.d, args.k, args.h), args.d * args.k
    elif system == "AH":
        _need(args, "N", "k", "h")
        spec, degree = plain_double_points(args.N, args.k, args.h), args.k
    elif system == "Lambda":
        _need(args, "N", "n", "k", "h")
        spec = lambda_double_points(args.N, args.k, args.n, args.h, args.placement)
        degree = args.k
    elif system == "Va":
        _need(args, "n", "d", "k", "a")
        spec, degree = veronese_fatpoint(args.n, args.d, args.k, args.a), args.d * args.k
    else:
        _need(args, "n", "d", "k", "a")
        spec, degree = planes_fatpoint(args.n, args.d, args.k, args.a), args.d * args.k
    report = compute_dimension(spec, seed=args.seed, trials=args.trials,
                               field=_field(args, degree), size_cap=args.size_cap)
    out.write(_emit(report.to_dict(), args.format))
    return EXIT_OK if report.verdict in (Verdict.CERTIFIED, Verdict.CLOSED_FORM) else EXIT_INCONCLUSIVE


def cmd_secant(args, out):
    field = _field(args, args.d * args.k)
    if args.cross_check:
        _, rep, _ = secant.cross_check(args.n, args.d, args.k, args.h, seed=args.seed,
                                       trials=args.trials, field=field)
    else:
        rep = secant.secant_dimension(args.n, args.d, args.k, args.h, seed=args.seed,
                                      trials=args.trials, field=field)
    out.write(_emit(rep.to_dict(), args.format))
    ok = rep.non_defective and rep.cross_check is not False
    return EXIT_OK if ok else EXIT_INCONCLUSIVE


def cmd_bounds(args, out):
    row = bounds.bounds_row(args.n, args.d, args.k)
    record = {"n": args.n, "k": args.k, **row.to_dict(), "generic_rank_ceil": row.generic_rank_ceil}
    out.write(_emit(record, args.format))
    return EXIT_OK


def cmd_toric(args, out):
    t = toric.standard_triangulation(args.n, args.d)
    if args.emit == "svg":
        if args.n != 2:
            raise UsageError("only n = 2 triangulations can be drawn")
        out.write(toric.to_svg(t))
        return EXIT_OK
    record = t.to_dict()
    status = EXIT_OK
    if args.validate:
        checks = toric.validate(t)
        record["checks"] = checks
        status = EXIT_OK if all(checks.values()) else EXIT_INCONCLUSIVE
    out.write(json.dumps(record) + "\n")
    return status


def cmd_ledger(args, out):
    if args.bruteforce:
        entry, _ = ledger.ledger_bruteforce(args.n, args.d, args.k, args.h, seed=args.seed,
                                            trials=args.trials, field=_field(args, args.d * args.k))
    else:
        entry = ledger.ledger(args.n, args.d, args.k, args.h)
    if args.format == "csv":
        out.write(ledger.to_csv([entry]))
    else:
        out.write(_emit(entry.row(), args.format))
    ok = entry.consistent and entry.verified is not False
    return EXIT_OK if ok else EXIT_INCONCLUSIVE


def cmd_report(args, out):
    rows = bounds.comparison_table(args.n, args.k, args.d)
    if args.format == "csv":
        out.write(bounds.to_csv(rows))
    elif args.format == "svg":
        out.write(bounds.to_svg(rows))
    else:
        out.write(bounds.to_json(rows))
    return EXIT_OK


COMMANDS = {"dim": cmd_dim, "secant": cmd_secant, "bounds": cmd_bounds, "toric": cmd_toric,
            "ledger": cmd_ledger, "report": cmd_report}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        env = {"prime": _env_int("SECPOWERS_PRIME", DEFAULT_PRIME),
               "seed": _env_int("SECPOWERS_SEED", 0),
               "size_cap": _env_int("SECPOWERS_SIZE_CAP", DEFAULT_SIZE_CAP)}
    except UsageError as exc:
        print(f"secpowers: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    args = build_parser(env).parse_args(argv)
    if args.trials < 1:
        print("secpowers: error: --trials must be >= 1", file=sys.stderr)
        return EXIT_ERROR
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError, ResourceLimitError, RuntimeError) as exc:
        print(f"secpowers: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
