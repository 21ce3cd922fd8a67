"""Command-line interface: ``pathpairs <subcommand> ...``.

Exit codes: 0 success or passing report, 1 failing report, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from pathpairs.errors import DomainError, RangeError, SplitError
from pathpairs.exact_math import StrictQuery, strict_count
from pathpairs.lattice import enumerate_strict, enumerate_weak, strict_count_oracle
from pathpairs.report import FAIL
from pathpairs.series import az_polynomials, kcatalan_series, series_power
from pathpairs.triangles import BUILDERS, weak_count_formula
from pathpairs import verify

METHOD_ALIASES = {"recursive": "recursive", "formula": "closed_form", "riordan": "riordan"}


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pathpairs", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("triangle", help="print a (k, epsilon)-Catalan triangle")
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--epsilon", type=int, required=True)
    t.add_argument("--rows", type=int, required=True)
    t.add_argument("--method", choices=sorted(METHOD_ALIASES), default="recursive")
    t.add_argument("--format", choices=("csv", "json"), default="csv")

    c = sub.add_parser("count", help="count strict k-path pairs")
    for name in ("k", "n", "delta", "epsilon"):
        c.add_argument(f"--{name}", type=int, required=True)
    c.add_argument("--method", choices=("oracle", "formula"), default="formula")

    w = sub.add_parser("weak", help="count weak k-path pairs")
    for name in ("k", "n", "delta", "epsilon"):
        w.add_argument(f"--{name}", type=int, required=True)
    w.add_argument("--returns", type=int, default=None)
    w.add_argument("--method", choices=("oracle", "formula"), default="formula")

    e = sub.add_parser("enumerate", help="list path pairs as upper/lower")
    for name in ("k", "n", "delta", "epsilon"):
        e.add_argument(f"--{name}", type=int, required=True)
    e.add_argument("--weak", action="store_true")
    e.add_argument("--returns", type=int, default=None)

    s = sub.add_parser("series", help="coefficients of C_k(t)^power")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--power", type=int, default=1)
    s.add_argument("--order", type=int, required=True)

    a = sub.add_parser("az", help="A- and Z-sequence polynomials")
    a.add_argument("--k", type=int, required=True)
    a.add_argument("--epsilon", type=int, required=True)

    v = sub.add_parser("verify", help="run a verification suite and print a JSON report")
    v.add_argument("--suite", choices=("strict", "weak", "identities", "golden"), required=True)
    v.add_argument("--k", type=int, default=2)
    v.add_argument("--epsilon", type=int, default=0)
    v.add_argument("--max-n", type=int, default=6)
    v.add_argument("--order", type=int, default=16)
    v.add_argument("--golden", default=None, help="fixture CSV (strict) or fixture directory (golden)")
    return p


def _weak_formula_total(args) -> int:
    if args.returns is not None:
        return weak_count_formula(args.k, args.n, args.delta, args.epsilon, args.returns)
    return sum(
        weak_count_formula(args.k, args.n, args.delta, args.epsilon, m)
        for m in range(args.n + 1)
    )


def _run(args, out) -> int:
    cmd = args.command
    if cmd == "triangle":
        tri = BUILDERS[METHOD_ALIASES[args.method]](args.k, args.epsilon, args.rows)
        out.write(tri.to_csv() if args.format == "csv" else tri.to_json() + "\n")
    elif cmd == "count":
        if args.method == "oracle":
            value = strict_count_oracle(args.k, args.n, args.delta, args.epsilon)
        else:
            value = strict_count(StrictQuery(args.k, args.n, args.delta, args.epsilon))
        out.write(f"{value}\n")
    elif cmd == "weak":
        if args.method == "oracle":
            value = len(enumerate_weak(args.k, args.n, args.delta, args.epsilon, args.returns))
        else:
            value = _weak_formula_total(args)
        out.write(f"{value}\n")
    elif cmd == "enumerate":
        if args.weak:
            pairs = enumerate_weak(args.k, args.n, args.delta, args.epsilon, args.returns)
        else:
            pairs = enumerate_strict(args.k, args.n, args.delta, args.epsilon)
        for pair in pairs:
            out.write(f"{pair}\n")
    elif cmd == "series":
        s = series_power(kcatalan_series(args.k, args.order), args.power)
        out.write(json.dumps(s.to_dict()) + "\n")
    elif cmd == "az":
        A, Z = az_polynomials(args.k, args.epsilon)
        out.write(json.dumps({"A": A.to_dict(), "Z": Z.to_dict()}) + "\n")
    elif cmd == "verify":
        if args.suite == "strict":
            report = verify.cross_check_strict(args.k, args.epsilon, args.max_n)
            if args.golden:
                report.merge(verify.check_golden(args.k, args.epsilon, args.golden))
        elif args.suite == "weak":
            report = verify.cross_check_weak(args.k, args.max_n)
        elif args.suite == "identities":
            report = verify.identity_suite(args.order)
        else:
            report = verify.golden_suite(args.golden)
        out.write(report.to_json() + "\n")
        return 1 if report.status == FAIL else 0
    return 0


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = _parser().parse_args(argv)
    try:
        return _run(args, out)
    except (DomainError, RangeError, SplitError, ValueError, OSError) as exc:
        print(f"pathpairs {args.command}: {exc}", file=sys.stderr)
        return 2


def run(argv: Sequence[str]) -> int:
    """Like :func:`main`, but returns 2 on usage errors instead of raising SystemExit."""
    try:
        return main(argv)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
