"""Command-line front end: `hecke-bz <command> [flags]`.

Commands: derive-speh (derivative of a Speh module against the
vertical-strip rule), verify (named invariant suites), principal
(principal-series construction and derivative dimensions).  Output is a
single report in JSON or as a flattened table; exit status is 0 when the
report passes, 1 on a verification failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from math import factorial, log

from .affine.modules import (
    bz_dimension,
    principal_series,
    verify_relations,
)
from .combinatorics import is_partition, parse_partition
from .graded import g_bz_derivative, pieri_verify, speh_module
from .reports import SUITES, make_report, render, resolve_config

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hecke-bz",
        description="Hecke-algebra derivative toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"),
                        default="json", help="report rendering")
    common.add_argument("--timings", action="store_true",
                        help="include wall-clock timings in the report "
                             "(off by default: reports stay byte-stable)")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes for suite cases "
                             "(env HECKEBZ_THREADS)")
    common.add_argument("--q", dest="q0", type=float, default=None,
                        help="numeric Hecke parameter q0 (env HECKEBZ_Q0)")
    common.add_argument("--tol", type=float, default=None,
                        help="numeric residual tolerance (env HECKEBZ_TOL)")
    common.add_argument("--cluster-tol", type=float, default=None,
                        help="eigenvalue clustering tolerance "
                             "(env HECKEBZ_CLUSTER_TOL)")

    d = sub.add_parser("derive-speh", parents=[common],
                       help="derivative of a Speh module vs vertical strips")
    d.add_argument("--shape", required=True,
                   help="partition, comma separated (e.g. 3,2,1)")
    d.add_argument("--i", required=True, type=int, dest="order",
                   help="derivative order")
    d.add_argument("--kappa", type=float, default=None,
                   help="numeric kappa for a floating cross-check at q0")

    v = sub.add_parser("verify", parents=[common],
                       help="run a named invariant suite")
    v.add_argument("suite", choices=sorted(SUITES),
                   help="suite name")
    v.add_argument("--max-n", type=int, default=None,
                   help="rank bound for the sweep")
    v.add_argument("--n", type=int, default=None,
                   help="alias for --max-n")

    p = sub.add_parser("principal", parents=[common],
                       help="principal-series module report")
    p.add_argument("--n", required=True, type=int, help="rank")
    p.add_argument("--t", required=True,
                   help="character, comma-separated rationals (e.g. 1,4)")
    p.add_argument("--derive", type=int, default=None, dest="derive_i",
                   help="also report the derivative dimension at this order")
    return parser


def _cmd_derive_speh(args, config) -> dict:
    try:
        shape = parse_partition(args.shape)
    except ValueError as exc:
        raise SystemExit(f"hecke-bz: {exc}") from exc
    if not is_partition(shape) or not shape:
        raise SystemExit(f"hecke-bz: not a partition: {args.shape!r}")
    n = sum(shape)
    if not 0 <= args.order <= n:
        raise SystemExit(
            f"hecke-bz: derivative order must lie in 0..{n}, "
            f"got {args.order}")
    started = time.perf_counter()
    rep = pieri_verify(shape, args.order)
    inputs = {"shape": list(shape), "i": args.order}
    results = {
        "dim": rep["dim"],
        "predicted": rep["predicted"],
        "computed": rep["computed"],
    }
    passed = rep["pass"]
    if args.kappa is not None:
        p0 = log(config["q0"])
        inputs["kappa"] = args.kappa
        inputs["q0"] = config["q0"]
        G = speh_module(shape, "numeric", p0=p0, kappa0=args.kappa)
        numeric_dim = g_bz_derivative(G, args.order).dim
        results["numeric_dim"] = numeric_dim
        passed = passed and numeric_dim == rep["dim"]
    timings = {"seconds": round(time.perf_counter() - started, 3)} \
        if args.timings else None
    return make_report("derive-speh", inputs, results, passed, timings)


def _cmd_verify(args, config) -> dict:
    bound = args.max_n if args.max_n is not None else args.n
    started = time.perf_counter()
    inputs, results, passed = SUITES[args.suite](bound, config)
    inputs = {"suite": args.suite, **inputs,
              "threads": config["threads"]}
    timings = {"seconds": round(time.perf_counter() - started, 3)} \
        if args.timings else None
    return make_report("verify", inputs, results, passed, timings)


def _cmd_principal(args, config) -> dict:
    if args.n < 1:
        raise SystemExit("hecke-bz: rank must be positive")
    try:
        t = tuple(Fraction(part) for part in args.t.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise SystemExit(f"hecke-bz: bad character {args.t!r}: {exc}") \
            from exc
    if len(t) != args.n:
        raise SystemExit(
            f"hecke-bz: character needs {args.n} coordinates, got {len(t)}")
    if not all(t):
        raise SystemExit("hecke-bz: character coordinates must be nonzero")
    if args.derive_i is not None and not 0 <= args.derive_i <= args.n:
        raise SystemExit(
            f"hecke-bz: derivative order must lie in 0..{args.n}")
    started = time.perf_counter()
    M = principal_series(args.n, t)
    rel = verify_relations(M)
    inputs = {"n": args.n, "t": [str(v) for v in t]}
    results = {
        "dim": M.dim,
        "relations": {
            "pass": rel["pass"],
            "residual": 0 if rel["pass"] else "nonzero",
        },
    }
    passed = rel["pass"]
    if args.n == 1:
        results["theta_1"] = str(M.theta[0][0][0])
    if args.derive_i is not None:
        d = bz_dimension(M, args.derive_i)
        results["derivative"] = {"i": args.derive_i, "dim": d,
                                 "free_rank_prediction":
                                     factorial(args.n)
                                     // factorial(args.derive_i)}
        inputs["derive"] = args.derive_i
    timings = {"seconds": round(time.perf_counter() - started, 3)} \
        if args.timings else None
    return make_report("principal", inputs, results, passed, timings)


_COMMANDS = {
    "derive-speh": _cmd_derive_speh,
    "verify": _cmd_verify,
    "principal": _cmd_principal,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = resolve_config(q0=args.q0, tol=args.tol,
                                cluster_tol=args.cluster_tol,
                                threads=args.threads)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        report = _COMMANDS[args.command](args, config)
    except SystemExit as exc:
        if exc.code and isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 2
        raise
    print(render(report, args.format))
    return 0 if report["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
