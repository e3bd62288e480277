#!/usr/bin/env python3
"""Time the pure-Python kernels against the compiled extension.

Runs each kernel on a representative workload with both backends and prints
a table with the speedup.  Workload sizes roughly match the heaviest calls
in the test suite; use --quick for a fast sanity pass.
"""

import argparse
import time

from twocolor import _kernels_py

try:
    from twocolor import _speedups
except ImportError:
    _speedups = None


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - start)
    return min(times)


def workloads(quick):
    dp_n = 2500 if quick else 10020
    order = 300 if quick else 600
    parts = list(range(1, dp_n + 1)) + list(range(4, dp_n + 1, 4))
    # partition-sized big-int coefficients for the exact kernels
    series = _kernels_py.invert_int(
        _kernels_py.qproduct_int(1, 1, -1, order), order, 1)
    residues = [v % 5 for v in series]
    return [
        ("dp_counts",    "dp_counts",    (parts, dp_n)),
        ("mul_int",      "mul_int",      (series, series, order)),
        ("invert_int",   "invert_int",   (series, order, 1)),
        ("mul_mod",      "mul_mod",      (residues, residues, order, 5)),
        ("invert_mod",   "invert_mod",   ([1] + residues[1:], order, 5, 1)),
        ("qproduct_int", "qproduct_int", (1, 1, -1, 4 * order)),
        ("qproduct_mod", "qproduct_mod", (1, 1, -1, 4 * order, 5)),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    parser.add_argument("--repeat", type=int, default=3, help="take the best of N runs")
    args = parser.parse_args()

    if _speedups is None:
        print("compiled extension not available; timing the pure backend only")

    print("%-14s %10s %10s %9s" % ("kernel", "pure (s)", "compiled", "speedup"))
    for name, attr, call_args in workloads(args.quick):
        pure = best_of(getattr(_kernels_py, attr), call_args, args.repeat)
        if _speedups is None:
            print("%-14s %10.4f %10s %9s" % (name, pure, "-", "-"))
            continue
        fast = best_of(getattr(_speedups, attr), call_args, args.repeat)
        print("%-14s %10.4f %10.4f %8.1fx" % (name, pure, fast, pure / fast))


if __name__ == "__main__":
    main()
