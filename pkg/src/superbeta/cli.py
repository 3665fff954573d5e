"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage error,
3 domain error (a precondition of the requested computation is violated).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import beta as sb
from .errors import DomainError
from .specfun import hyp2f1
from .supergrass import chart_count, charts, g2244_demo
from .verify import SUITE_NAMES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


def _fmt(z) -> str:
    """Round to 14 significant digits so quadrature noise stays out of the output."""
    z = complex(z)
    re, im = float(f"{z.real:.14g}"), float(f"{z.imag:.14g}")
    if im == 0:
        return repr(re)
    return repr(complex(re, im))


def _json_value(z):
    z = complex(z)
    return z.real if z.imag == 0 else {"re": z.real, "im": z.imag}


def _add_beta_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--p1", type=float, required=True)
    p.add_argument("--p2", type=float, required=True)
    p.add_argument("--xi", type=float, default=1.0)
    p.add_argument("--xi-prime", type=float, default=0.0)
    p.add_argument("--eta", type=float, default=0.0)
    p.add_argument("--nodes", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superbeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one integral or special function")
    ev_sub = ev.add_subparsers(dest="what", required=True)

    bs = ev_sub.add_parser("beta-super", help="beta super-integral B(s, p1, p2; xi, xi', eta)")
    _add_beta_flags(bs)
    bs.add_argument("--method", choices=("numeric", "closed", "both"), default="numeric")

    ph = ev_sub.add_parser("phi", help="Phi on G(2|1,3|2) at the point with coordinate x21")
    _add_beta_flags(ph)
    ph.add_argument("--x21", type=float, default=-1.0)
    ph.add_argument("--route", choices=("beta", "raw", "both"), default="beta")

    cp = ev_sub.add_parser("classical-phi", help="classical Phi(alpha, beta) with y1 > 0 > y2")
    cp.add_argument("--alpha", type=float, required=True)
    cp.add_argument("--beta", type=float, required=True)
    cp.add_argument("--y1", type=float, default=1.0)
    cp.add_argument("--y2", type=float, default=-1.0)
    cp.add_argument("--nodes", type=int, default=None)

    hf = ev_sub.add_parser("2f1", help="Gauss hypergeometric 2F1(a, b; c; z)")
    for name in ("a", "b", "c", "z"):
        hf.add_argument(f"--{name}", type=complex, required=True)

    for p in (bs, ph, cp, hf):
        p.add_argument("--format", choices=("text", "json"), default="text")

    ve = sub.add_parser("verify", help="run verification suites")
    ve.add_argument("--suite", choices=SUITE_NAMES, default="all")
    ve.add_argument("--out", type=Path, default=None, help="write the report here instead of stdout")
    ve.add_argument("--format", choices=("json", "csv"), default="json")
    ve.add_argument("--tol", type=float, default=None, help="override every check's tolerance")
    ve.add_argument("--nodes", type=int, default=None)

    ch = sub.add_parser("charts", help="enumerate super-charts of G(k|l, n|m)")
    ch.add_argument("--k", type=int)
    ch.add_argument("--l", type=int)
    ch.add_argument("--n", type=int)
    ch.add_argument("--m", type=int)
    ch.add_argument("--demo", choices=("g2244",), default=None)
    return parser


def _beta_params(args, **extra) -> sb.BetaParams:
    return sb.BetaParams(args.s, args.p1, args.p2, args.xi, args.xi_prime, args.eta, **extra)


def cmd_eval(args) -> int:
    values: dict[str, complex] = {}
    if args.what == "beta-super":
        p = _beta_params(args)
        if args.method in ("numeric", "both"):
            values["numeric"] = sb.beta_super_numeric(p, args.nodes)
        if args.method in ("closed", "both"):
            values["closed"] = sb.beta_super_closed(p)
    elif args.what == "phi":
        p = _beta_params(args, x21=args.x21)
        if args.route in ("beta", "both"):
            values["beta"] = sb.phi_super(p, args.nodes)
        if args.route in ("raw", "both"):
            values["raw"] = sb.phi_super_raw(p, args.nodes)
    elif args.what == "classical-phi":
        values["value"] = sb.classical_phi(sb.ClassicalParams(args.alpha, args.beta, args.y1, args.y2), args.nodes)
    else:
        values["value"] = hyp2f1(args.a, args.b, args.c, args.z)

    if args.format == "json":
        print(json.dumps({k: _json_value(v) for k, v in values.items()}))
    elif len(values) == 1:
        print(_fmt(next(iter(values.values()))))
    else:
        for k, v in values.items():
            print(f"{k}: {_fmt(v)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(args.suite, tol=args.tol, nodes=args.nodes)
    text = report.to_json() if args.format == "json" else report.to_csv()
    if args.out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        args.out.write_text(text, encoding="utf-8")
    n_fail = len(report.failures)
    print(f"{args.suite}: {len(report.checks) - n_fail}/{len(report.checks)} checks passed", file=sys.stderr)
    for c in report.failures:
        print(f"FAIL {c.check_id} {c.parameters} rel_error={c.rel_error:.3g} tol={c.tolerance:g}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def _print_matrix(labels) -> None:
    width = max(len(x) for row in labels for x in row)
    for row in labels:
        print("  [" + " ".join(x.rjust(width) for x in row) + "]")


def cmd_charts(args, parser) -> int:
    if args.demo == "g2244":
        demo = g2244_demo()
        for name, chart, cols, labels in zip(("B", "B'"), demo["charts"], demo["minor_columns"], demo["labels"]):
            print(f"{name}: chart {chart}, minor columns {cols}")
            _print_matrix(labels)
        print(f"transition error: {demo['transition_error']:.3g}")
        return EXIT_OK
    dims = (args.k, args.l, args.n, args.m)
    if any(d is None for d in dims):
        parser.error("charts needs --k --l --n --m or --demo g2244")
    k, l, n, m = dims  # noqa: E741
    listing = charts(k, l, n, m)
    for i, c in enumerate(listing):
        print(f"{i}: {c} columns {c.columns(n)}")
    print(f"count: {chart_count(k, l, n, m)}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "eval":
            return cmd_eval(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_charts(args, parser)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    except DomainError as exc:
        print(f"domain error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
