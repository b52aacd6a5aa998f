"""``ifdist`` command-line interface.

Exit codes: 0 success, 1 a verification check failed, 2 bad input, 3 numerical
non-convergence.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from ifdist import density, entropy, grids, moments, registry, verify
from ifdist.quadrature import NonConvergence

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2, 3

_EVAL = {
    "pdf": density.pdf,
    "logpdf": density.log_pdf,
    "cdf": density.cdf,
    "quantile": density.quantile,
}


class InputError(Exception):
    pass


def fmt(value):
    """At most 15 significant digits, locale independent."""
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return "%.15g" % value


def _dist(text):
    try:
        return registry.parse_dist(text)
    except (ValueError, registry.UnknownCase) as exc:
        raise InputError(str(exc)) from None


def cmd_eval(args, out):
    params = _dist(args.dist)
    try:
        value = _EVAL[args.fn](params, args.at)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print(fmt(value), file=out)


def cmd_moment(args, out):
    params = _dist(args.dist)
    if args.r < 0:
        raise InputError("--r must be a nonnegative integer")
    result = moments.moment(params, args.r, fallback=args.fallback)
    if result.is_finite:
        print(f"finite {fmt(result.value)} {result.method}", file=out)
    else:
        print(result.kind, file=out)


def cmd_entropy(args, out):
    params = _dist(args.dist)
    print(fmt(entropy.entropy(params).value), file=out)


def cmd_sample(args, out):
    params = _dist(args.dist)
    if args.n < 0:
        raise InputError("--n must be >= 0")
    if not 0 <= args.seed < 2**64:
        raise InputError("--seed must be an unsigned 64-bit integer")
    values = density.sample(params, args.seed, args.n)
    out.write("".join(fmt(v) + "\n" for v in values))


def cmd_grid(args, out):
    params = _dist(args.dist)
    lo, hi = getattr(args, "from"), args.to
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise InputError("--from must be smaller than --to")
    if args.points < 2:
        raise InputError("--points must be at least 2")
    xs = np.linspace(lo, hi, args.points)
    values = _EVAL[args.fn](params, xs)
    if args.format == "json":
        records = [{"x": float(x), "value": _json_number(v)} for x, v in zip(xs, values)]
        print(json.dumps(records), file=out)
    else:
        print("x,value", file=out)
        for x, v in zip(xs, values):
            print(f"{fmt(x)},{fmt(v)}", file=out)


def _json_number(v):
    v = float(v)
    return v if math.isfinite(v) else fmt(v)


def cmd_verify(args, out):
    report = verify.run(args.suite)
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2), file=out)
    else:
        for c in report.checks:
            kind = "rel" if c.relative else "abs"
            status = "PASS" if c.passed else "FAIL"
            print(
                f"{status} {c.id}: {c.description} "
                f"(expected {fmt(c.expected)}, actual {fmt(c.actual)}, {kind} tol {c.tolerance:g})",
                file=out,
            )
        s = report.summary
        print(f"{s['passed']}/{s['total']} passed, {s['failed']} failed", file=out)
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_registry(args, out):
    if args.list:
        for name in registry.list_cases():
            print(name, file=out)
        return
    try:
        case = registry.get_case(args.show)
    except registry.UnknownCase as exc:
        raise InputError(str(exc)) from None
    print(case.describe(), file=out)
    for con in registry.table_constraints(case.name, grids.REGISTRY_POINTS[case.name][0]):
        print(f"  max-entropy constraint: {con.description}", file=out)


def build_parser():
    parser = argparse.ArgumentParser(prog="ifdist", description="Interpolating Family distributions")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_dist(p):
        p.add_argument("--dist", required=True, help='"if(p=..,b=..,c=..,q=..,x0=..)" or "name(sym=v,...)"')
        return p

    p = with_dist(sub.add_parser("eval", help="evaluate pdf, logpdf, cdf or quantile"))
    p.add_argument("--fn", required=True, choices=sorted(_EVAL))
    p.add_argument("--at", required=True, type=float)
    p.set_defaults(func=cmd_eval)

    p = with_dist(sub.add_parser("moment", help="raw moment E[X^r]"))
    p.add_argument("--r", required=True, type=int)
    p.add_argument("--fallback", action="store_true", help="use quadrature for the general family")
    p.set_defaults(func=cmd_moment)

    p = with_dist(sub.add_parser("entropy", help="differential entropy in nats"))
    p.set_defaults(func=cmd_entropy)

    p = with_dist(sub.add_parser("sample", help="seeded inverse-transform draws"))
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sample)

    p = with_dist(sub.add_parser("grid", help="pdf or cdf on an even grid"))
    p.add_argument("--fn", required=True, choices=["pdf", "cdf"])
    p.add_argument("--from", required=True, type=float)
    p.add_argument("--to", required=True, type=float)
    p.add_argument("--points", type=int, default=101)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=[*verify.SUITES, "all"], default="all")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("registry", help="named special cases")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--list", action="store_true")
    group.add_argument("--show", metavar="NAME")
    p.set_defaults(func=cmd_registry)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args, out)
    except InputError as exc:
        print(f"ifdist: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NonConvergence as exc:
        print(f"ifdist: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
