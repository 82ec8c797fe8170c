"""Command-line front end: verify suites, evaluate kernels, dump the table.

Verification reports stream as one JSON object per line; exit code 0 means
every check passed, 1 means at least one failed (or a singular evaluation),
and 2 is a usage error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import monogenic as mono
from . import slice_kernels as sk
from .algebra import format_octonion, imaginary_table_entry, parse_octonion
from .domains import DomainSpec
from .errors import OctokernelsError, SingularityError
from .verify import SUITE_NAMES, VerifyConfig, run_suite


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octokernels",
        description="Verify octonionic kernel identities and evaluate kernels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITE_NAMES)
    v.add_argument("--seed", type=int, default=7)
    v.add_argument("--samples", type=int, default=200_000,
                   help="Monte Carlo sample count")
    v.add_argument("--trunc", type=int, default=16,
                   help="series truncation degree for randomized checks")
    v.add_argument("--tol", type=float, default=None,
                   help="override the deterministic tolerances")
    v.add_argument("--d", type=float, default=1.0, help="strip width")
    v.add_argument("--N", type=int, default=50, dest="terms",
                   help="strip series truncation order")
    v.add_argument("--variant", choices=("scalar", "octonion"), default="scalar",
                   help="unit-ball Bergman kernel first factor")
    v.add_argument("--circle-nodes", type=int, default=None)
    v.add_argument("--disk-order", type=int, default=None)
    v.add_argument("--json", action="store_true",
                   help="JSON-lines output (the default; kept for symmetry)")

    e = sub.add_parser("eval", help="evaluate a kernel at given points")
    e.add_argument("--family", choices=("szego", "bergman", "cauchy"), required=True)
    e.add_argument("--setting", choices=("monogenic", "slice"), default="monogenic")
    e.add_argument("--domain", choices=("ball", "halfspace", "strip"), default="ball")
    e.add_argument("-x", required=True, metavar="LITERAL",
                   help='first kernel argument as "c0,c1,...,c7"')
    e.add_argument("-y", default="0,0,0,0,0,0,0,0", metavar="LITERAL",
                   help="second kernel argument (default 0)")
    e.add_argument("--d", type=float, default=1.0, help="strip width")
    e.add_argument("--N", type=int, default=50, dest="terms",
                   help="strip series truncation order")
    e.add_argument("--variant", choices=("scalar", "octonion"), default="scalar")
    e.add_argument("--csv", action="store_true",
                   help="print a CSV row: x, y and the 8 value components")

    sub.add_parser("table", help="print the imaginary multiplication table")
    return parser


def _eval_kernel(args) -> np.ndarray:
    x = parse_octonion(args.x)
    y = parse_octonion(args.y)
    if args.setting == "monogenic":
        dom = DomainSpec(kind=args.domain, d=args.d, terms=args.terms)
        if args.family == "cauchy":
            return mono.cauchy_kernel(x - y)
        if args.family == "szego":
            return mono.szego_kernel(dom, x, y)
        return mono.bergman_kernel(dom, x, y, variant=args.variant)

    if args.family == "cauchy":
        return sk.slice_cauchy_kernel(x, y)
    if args.family == "szego":
        if args.domain == "ball":
            return sk.slice_szego_ball(x, y)
        if args.domain == "halfspace":
            return sk.slice_szego_halfspace(x, y)
        return sk.slice_szego_strip(x, y, args.d, args.terms)
    if args.domain == "ball":
        return sk.slice_bergman_ball(x, y)
    if args.domain == "halfspace":
        return sk.slice_bergman_halfspace(x, y)
    return sk.slice_bergman_strip(x, y, args.d, args.terms)


def _print_table(out=None):
    out = out if out is not None else sys.stdout
    labels = [f"e{i}" for i in range(1, 8)]
    width = 5

    def cell(text):
        return text.rjust(width)

    print(cell("") + "".join(cell(l) for l in labels), file=out)
    for i in range(1, 8):
        row = [cell(f"e{i}")]
        for j in range(1, 8):
            s, k = imaginary_table_entry(i, j)
            text = ("-" if s < 0 else "") + (f"e{k}" if k else "1")
            row.append(cell(text))
        print("".join(row), file=out)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.command == "table":
        _print_table()
        return 0

    if args.command == "eval":
        try:
            value = _eval_kernel(args)
        except SingularityError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        except (OctokernelsError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        if args.csv:
            row = np.concatenate([parse_octonion(args.x), parse_octonion(args.y), value])
            print(",".join(np.format_float_positional(v + 0.0, trim="-") for v in row))
        else:
            print(format_octonion(value))
        return 0

    cfg = VerifyConfig(
        seed=args.seed,
        samples=args.samples,
        trunc=args.trunc,
        tol=args.tol,
        d=args.d,
        terms=args.terms,
        variant=args.variant,
        circle_nodes=args.circle_nodes,
        disk_order=args.disk_order,
    )
    all_pass = True
    for report in run_suite(args.suite, cfg):
        print(report.as_json(), flush=True)
        all_pass = all_pass and report.passed
    return 0 if all_pass else 1


if __name__ == "__main__":
    sys.exit(main())
