"""Batch command-line front end.

Exit status: 0 when every check passes, 1 when a check fails or an
expression cannot be normalised, 2 for usage errors (unknown names,
malformed files, bad arguments).  Output is deterministic: one CHECK
line per diagram instance class, witnesses on failure, then a summary.
"""

import argparse
import sys

from .checks import check_monad_laws
from .errors import DistlawError, FileFormatError, ParseError, UnknownGenerator, UnsupportedNode
from .expr import parse_expr, tokenize
from .globular import brute_force_oracle, free_ncat, load_gset
from .laws import REGISTERED_LAWS
from .monads import ZOO
from .normalize import THEORIES, format_normal, normalize_expr
from .series import (check_distlaw, check_route_independence,
                     check_yang_baxter, validate_series)
from .terms import Carrier
from .theories import SERIES

TERM_BOUND = 3
STRING_BOUND = 2


class UsageError(Exception):
    pass


def _carrier(args):
    if getattr(args, "names", None):
        return Carrier(tuple(n.strip() for n in args.names.split(",") if n.strip()))
    return Carrier.of_size(args.generators)


def _series(name):
    if name not in SERIES:
        raise UsageError(f"unknown theory {name!r}; known: {', '.join(sorted(SERIES))}")
    return SERIES[name]


def _emit(report, out):
    for line in report.lines():
        print(line, file=out)
    return report.passed


def cmd_laws(args, out):
    if args.monad == "all":
        monads = list(ZOO.values())
    elif args.monad in ZOO:
        monads = [ZOO[args.monad]]
    else:
        raise UsageError(f"unknown monad {args.monad!r}; known: {', '.join(ZOO)}, all")
    carrier = _carrier(args)
    ok = True
    for monad in monads:
        ok &= _emit(check_monad_laws(monad, carrier, args.bound), out)
    print(f"{'PASS' if ok else 'FAIL'}: {len(monads)} monads", file=out)
    return ok


def cmd_distlaw(args, out):
    if args.law == "all":
        laws = list(REGISTERED_LAWS.values())
    elif args.law in REGISTERED_LAWS:
        laws = [REGISTERED_LAWS[args.law]]
    else:
        raise UsageError(
            f"unknown law {args.law!r}; known: {', '.join(REGISTERED_LAWS)}, all")
    carrier = _carrier(args)
    ok = True
    for law in laws:
        ok &= _emit(check_distlaw(law, carrier, args.bound), out)
    print(f"{'PASS' if ok else 'FAIL'}: {len(laws)} laws", file=out)
    return ok


def cmd_yang_baxter(args, out):
    series = _series(args.theory)
    carrier = _carrier(args)
    n = len(series)
    triples = ([tuple(args.triple)] if args.triple else
               [(i, j, k) for i in range(3, n + 1)
                for j in range(2, i) for k in range(1, j)])
    ok = True
    for i, j, k in triples:
        ok &= _emit(check_yang_baxter(series, i, j, k, carrier, args.bound), out)
    print(f"{'PASS' if ok else 'FAIL'}: {len(triples)} YB triples", file=out)
    return ok


def cmd_series(args, out):
    series = _series(args.theory)
    carrier = _carrier(args)
    report = validate_series(series, carrier, args.bound)
    _emit(report, out)
    n = len(series)
    pairs = n * (n - 1) // 2
    triples = n * (n - 1) * (n - 2) // 6
    print(f"{report.verdict}: {n} monads, {pairs} laws, {triples} YB triples", file=out)
    return report.passed


def cmd_routes(args, out):
    series = _series(args.theory)
    carrier = _carrier(args)
    if args.route:
        from .checks import compare
        from .monads import enum_stack
        from .series import all_routes, compose_series, parse_route
        try:
            route = parse_route(args.route)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        reference = compose_series(series, all_routes(len(series))[0])
        chosen = compose_series(series, route)
        inputs = enum_stack(series.monads + series.monads, list(carrier), args.bound)
        report = compare(f"routes[{series.name}]:{args.route.replace(' ', '')}",
                         inputs, reference.mult, chosen.mult)
        _emit(report, out)
        print(f"{report.verdict}: route {args.route.replace(' ', '')} agrees", file=out)
        return report.passed
    report = check_route_independence(series, carrier, args.bound)
    _emit(report, out)
    from .series import all_routes
    print(f"{report.verdict}: {len(all_routes(len(series)))} routes agree", file=out)
    return report.passed


def cmd_normalize(args, out):
    if args.theory not in THEORIES:
        raise UsageError(f"unknown theory {args.theory!r}; known: {', '.join(THEORIES)}")
    if args.names:
        carrier = Carrier(tuple(n.strip() for n in args.names.split(",") if n.strip()))
    else:
        seen = []
        for kind, value, _ in tokenize(args.expression):
            if kind == "IDENT" and value not in seen:
                seen.append(value)
        carrier = Carrier(tuple(sorted(seen)))
    ast = parse_expr(args.expression, carrier)
    print(format_normal(args.theory, normalize_expr(args.theory, ast)), file=out)
    return True


def cmd_ncat(args, out, force_oracle=False):
    try:
        with open(args.input, "r", encoding="utf-8") as handle:
            gset = load_gset(handle.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from None
    result = free_ncat(gset, args.bound)
    for dim, count in enumerate(result.counts()):
        print(f"dim {dim}: {count} cells", file=out)
    if force_oracle or args.compare_oracle:
        oracle = brute_force_oracle(gset, args.bound)
        if oracle == result.counts():
            print("ORACLE MATCH", file=out)
            return True
        print(f"ORACLE MISMATCH: {oracle}", file=out)
        return False
    return True


def build_parser():
    parser = argparse.ArgumentParser(
        prog="distlaw",
        description="Check monad laws, distributive laws and Yang-Baxter "
                    "conditions; normalise expressions; build free n-categories.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_carrier(p, default_gens=2):
        p.add_argument("--generators", type=int, default=default_gens,
                       help=f"carrier size, names a, b, c, ... (default {default_gens})")
        p.add_argument("--names", help="explicit comma-separated generator names")

    p = sub.add_parser("laws", help="monad laws for zoo monads")
    p.add_argument("--monad", default="all")
    add_carrier(p)
    p.add_argument("--bound", type=int, default=TERM_BOUND)

    p = sub.add_parser("distlaw", help="coherence diagrams for registered laws")
    p.add_argument("--law", default="all")
    add_carrier(p)
    p.add_argument("--bound", type=int, default=TERM_BOUND)

    p = sub.add_parser("yang-baxter", help="hexagon checks for a series")
    p.add_argument("--theory", required=True)
    p.add_argument("--triple", type=int, nargs=3, metavar=("I", "J", "K"))
    add_carrier(p, default_gens=1)
    p.add_argument("--bound", type=int, default=TERM_BOUND)

    p = sub.add_parser("series", help="validate a whole distributive series")
    p.add_argument("--theory", required=True)
    add_carrier(p, default_gens=1)
    p.add_argument("--bound", type=int, default=TERM_BOUND)

    p = sub.add_parser("routes", help="route independence of the composite")
    p.add_argument("--theory", required=True)
    p.add_argument("--route", help="one bracketing to compare, e.g. ((1,2),3)")
    add_carrier(p, default_gens=1)
    p.add_argument("--bound", type=int, default=2)

    p = sub.add_parser("normalize", help="canonical form of an expression")
    p.add_argument("--theory", required=True)
    p.add_argument("--names")
    p.add_argument("expression")

    p = sub.add_parser("ncat", help="free n-category cell counts from a file")
    p.add_argument("--input", required=True)
    p.add_argument("--bound", type=int, default=STRING_BOUND)
    p.add_argument("--compare-oracle", action="store_true")

    p = sub.add_parser("oracle-compare", help="free n-category versus brute force")
    p.add_argument("--input", required=True)
    p.add_argument("--bound", type=int, default=STRING_BOUND)
    p.add_argument("--compare-oracle", action="store_true", help=argparse.SUPPRESS)

    return parser


COMMANDS = {
    "laws": cmd_laws,
    "distlaw": cmd_distlaw,
    "yang-baxter": cmd_yang_baxter,
    "series": cmd_series,
    "routes": cmd_routes,
    "normalize": cmd_normalize,
    "ncat": cmd_ncat,
    "oracle-compare": lambda args, out: cmd_ncat(args, out, force_oracle=True),
}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        ok = COMMANDS[args.command](args, out)
    except (UsageError, FileFormatError, UnknownGenerator) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, UnsupportedNode) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DistlawError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
