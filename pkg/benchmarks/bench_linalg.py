"""Compare the compiled linear-algebra core against the pure-Python
fallback on the two hot kernels and on one end-to-end derivative.

Kernels are timed in-process (both backend modules import side by side
and are checked against each other on every input).  The end-to-end row
re-runs a fixed derivative computation in a subprocess per backend,
because the package binds the kernels at import time.

    python3 benchmarks/bench_linalg.py --sizes 12,24,36 --repeats 3
"""

import argparse
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

from hecke_bz import _linalg_py
from hecke_bz.scalars import QRational

try:
    from hecke_bz import _linalg_cy
except ImportError:
    _linalg_cy = None


def random_matrix(rows, cols, rng):
    return [[QRational(Fraction(rng.randint(-6, 6), rng.randint(1, 4)))
             for _ in range(cols)] for _ in range(rows)]


def best_of(fn, repeats):
    best = float("inf")
    out = None
    for _ in range(repeats):
        started = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - started)
    return best, out


def bench_kernels(sizes, repeats, seed):
    rng = random.Random(seed)
    rows = []
    for size in sizes:
        A = random_matrix(size, size, rng)
        B = random_matrix(size, size, rng)
        for op, args in (("mat_mul", (A, B)), ("rref", (A,))):
            t_py, out_py = best_of(lambda: getattr(_linalg_py, op)(*args),
                                   repeats)
            if _linalg_cy is None:
                rows.append((size, op, None, t_py))
                continue
            t_cy, out_cy = best_of(lambda: getattr(_linalg_cy, op)(*args),
                                   repeats)
            if op == "rref":
                out_py, out_cy = out_py[0], out_cy[0]
            if out_py != out_cy:
                raise AssertionError(f"backends disagree on {op} at {size}")
            rows.append((size, op, t_cy, t_py))
    return rows


_END_TO_END = """
import random
from fractions import Fraction
from hecke_bz.affine.modules import bz_dimension, principal_series
from hecke_bz.scalars import QRational

rng = random.Random(5)
t = tuple(QRational(Fraction(p, 1 + k % 2)) for k, p in enumerate((2, 3, 5, 7)))
M = principal_series(4, t)
assert bz_dimension(M, 2) == 12
"""


def bench_end_to_end(repeats):
    out = {}
    for backend in ("cy", "py"):
        if backend == "cy" and _linalg_cy is None:
            out[backend] = None
            continue
        env = dict(os.environ, HECKEBZ_LINALG=backend)
        best = float("inf")
        for _ in range(repeats):
            started = time.perf_counter()
            subprocess.run([sys.executable, "-c", _END_TO_END],
                           env=env, check=True)
            best = min(best, time.perf_counter() - started)
        out[backend] = best
    return out


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="12,24,36",
                        help="comma-separated square matrix sizes")
    parser.add_argument("--repeats", type=int, default=3,
                        help="take the best of this many runs")
    parser.add_argument("--seed", type=int, default=2026)
    parser.add_argument("--skip-end-to-end", action="store_true")
    args = parser.parse_args(argv)
    sizes = [int(s) for s in args.sizes.split(",")]

    if _linalg_cy is None:
        print("compiled core not built; timing the fallback only\n")
    header = f"{'size':>5}  {'kernel':<8} {'cy (s)':>10} {'py (s)':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for size, op, t_cy, t_py in bench_kernels(sizes, args.repeats, args.seed):
        cy = f"{t_cy:10.4f}" if t_cy is not None else "         -"
        ratio = f"{t_py / t_cy:7.1f}x" if t_cy else "       -"
        print(f"{size:>5}  {op:<8} {cy} {t_py:10.4f} {ratio}")

    if not args.skip_end_to_end:
        times = bench_end_to_end(args.repeats)
        print("\nend-to-end derivative of a rank-4 principal series"
              " (subprocess, includes interpreter start)")
        for backend, t in times.items():
            label = f"{t:.3f}s" if t is not None else "not built"
            print(f"  {backend}: {label}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
