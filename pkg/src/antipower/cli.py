"""Command-line front end.

Exit status: 0 success, 1 falsification or I/O failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import anti_power as ap
from . import verify
from ._backend import BACKEND
from .theory import FalsificationError
from .words import FactorSpec, tm_factor, tm_letter, tm_prefix_packed


class UsageError(Exception):
    pass


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def _emit(args, value, witness=None, text=None):
    if args.json:
        print(json.dumps({"input": args.n, "value": value, "witness": witness}))
    else:
        print(text if text is not None else value)


def cmd_letter(args):
    print(tm_letter(args.i))


def cmd_factor(args):
    if args.beta < args.alpha:
        raise UsageError(f"need alpha <= beta, got {args.alpha} > {args.beta}")
    print(tm_factor(FactorSpec(args.alpha, args.beta)))


def cmd_prefix(args):
    print(tm_prefix_packed(args.n))


def _odd(m):
    if m % 2 == 0:
        raise UsageError(f"m must be odd, got {m}")


def cmd_kappa(args):
    _odd(args.n)
    if args.lam > 1:
        _emit(args, ap.kappa_lambda(args.n, args.lam))
    else:
        res = ap.kappa(args.n)
        _emit(args, res.kappa, list(res.witness))


def cmd_gamma(args):
    value = ap.gamma(args.n)
    _emit(args, value, {"kappa": ap.kappa(value).kappa})


def _need_k3(k):
    if k < 3:
        raise UsageError(f"k must be >= 3 (the complement of F(k) is empty or undefined below 3), got {k}")


def cmd_big_gamma(args):
    _need_k3(args.n)
    value = ap.big_gamma(args.n)
    _emit(args, value, list(ap.anti_power_report(value, args.n).first_collision))


def cmd_complement(args):
    _need_k3(args.n)
    members = list(ap.complement_set(args.n).members)
    witness = {str(m): list(ap.anti_power_report(m, args.n).first_collision) for m in members}
    _emit(args, members, witness, ",".join(map(str, members)))


def write_csv(rows, fh):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["key", "value", "ratio"])
    for row in rows:
        if row.error:
            writer.writerow([row.key, "", f"error: {row.error}"])
        else:
            writer.writerow([row.key, row.value, row.ratio])


def cmd_scan(args):
    if args.to < args.start:
        raise UsageError("--to must not be smaller than --from")
    rows = ap.scan(args.stat, args.start, args.to, args.stride, args.odd, args.threads)
    if args.out == "-":
        write_csv(rows, sys.stdout)
        return 0
    try:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            write_csv(rows, fh)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    return 0


def cmd_verify(args):
    reports = verify.run(args.suite, max_m=args.max_m, max_k=args.max_k, threads=args.threads)
    failed = any(r.failed for r in reports)
    if args.json:
        print(json.dumps([r.as_dict() for r in reports], indent=2))
    else:
        for r in reports:
            status = "FAIL" if r.failed else "ok"
            print(f"{status:4} {r.check:12} {r.swept:48} passed={r.passed} failed={r.failed} "
                  f"({r.seconds:.2f}s)")
            if r.first_failure:
                print(f"     counterexample: {r.first_failure}")
    return 1 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="antipower",
        description="Anti-power prefixes of the Thue-Morse word.",
        epilog=f"kernel backend: {BACKEND}",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("letter", help="print t_i (1-based)")
    p.add_argument("i", type=positive_int)
    p.set_defaults(func=cmd_letter)

    p = sub.add_parser("factor", help="print the factor <alpha,beta>")
    p.add_argument("alpha", type=positive_int)
    p.add_argument("beta", type=positive_int)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("prefix", help="print the prefix of length n")
    p.add_argument("n", type=positive_int)
    p.set_defaults(func=cmd_prefix)

    for name, func, meta, helptext in [
        ("kappa", cmd_kappa, "m", "smallest k whose length-km prefix is not a k-anti-power"),
        ("gamma", cmd_gamma, "k", "smallest odd m in F(k)"),
        ("big-gamma", cmd_big_gamma, "k", "largest odd m outside F(k), k >= 3"),
        ("complement", cmd_complement, "k", "odd m outside F(k), k >= 3"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("n", type=positive_int, metavar=meta)
        p.add_argument("--json", action="store_true", help="emit {input, value, witness}")
        if name == "kappa":
            p.add_argument("--lambda", dest="lam", type=positive_int, default=1,
                           help="allow each block value up to this many times")
        p.set_defaults(func=func)

    p = sub.add_parser("scan", help="write a statistic over a key range as CSV")
    p.add_argument("--stat", required=True, choices=["gamma", "big-gamma", "kappa"])
    p.add_argument("--from", dest="start", type=positive_int, required=True)
    p.add_argument("--to", type=positive_int, required=True)
    p.add_argument("--stride", type=positive_int, default=1)
    p.add_argument("--odd", action=argparse.BooleanOptionalAction, default=None,
                   help="restrict keys to odd values (default: on for kappa only)")
    p.add_argument("--out", required=True, help="CSV path, or - for stdout")
    p.add_argument("--threads", type=positive_int, default=ap.default_threads())
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run verification sweeps")
    p.add_argument("--suite", default="all", choices=[*verify.SUITES, "all"])
    p.add_argument("--max-m", type=positive_int)
    p.add_argument("--max-k", type=positive_int)
    p.add_argument("--threads", type=positive_int, default=ap.default_threads())
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args) or 0
    except (UsageError, ap.DomainError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (FalsificationError, ap.InvariantViolation) as exc:
        print(f"falsified: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
