#!/usr/bin/env python3
"""Benchmark the quaternion descent kernels: compiled extension vs the
pure-Python fallback, on identical workloads.

Usage:
    python benchmarks/bench_quatopt.py [--restarts N] [--repeat R]

The workload is the representation search workhorse: full descent runs on
the 5/1-surgery trefoil presentation (the worst not-found case in the
acceptance suite), plus batched defect and gradient evaluations.
"""

import argparse
import time

from su2slopes.presentations import surgery_presentation
from su2slopes.quatopt import available_backends
from su2slopes.slopes import Slope
from su2slopes.su2search import _flatten, starting_assignment


def time_workload(kernel, letters, offsets, starts, repeat):
    timings = {}

    begin = time.perf_counter()
    for _ in range(repeat):
        for start in starts:
            kernel.defect(start, letters, offsets)
    timings["defect"] = time.perf_counter() - begin

    begin = time.perf_counter()
    for _ in range(repeat):
        for start in starts:
            kernel.defect_gradient(start, letters, offsets)
    timings["gradient"] = time.perf_counter() - begin

    begin = time.perf_counter()
    final_defects = []
    for start in starts:
        _x, f, _iters = kernel.descend(start, letters, offsets, 4000, 1e-12, 1e-13)
        final_defects.append(f)
    timings["descend"] = time.perf_counter() - begin

    return timings, final_defects


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--restarts", type=int, default=100,
                        help="number of descent starting points (default 100)")
    parser.add_argument("--repeat", type=int, default=20,
                        help="repeats for defect/gradient timing (default 20)")
    args = parser.parse_args()

    pres = surgery_presentation(2, 3, Slope(5, 1))
    letters, offsets = _flatten(pres)
    starts = [
        starting_assignment(pres.generator_count, 1, k).images
        for k in range(args.restarts)
    ]

    backends = available_backends()
    print(f"workload: {args.restarts} descents + {args.repeat}x{args.restarts} "
          f"defect/gradient calls on a {sum(map(len, pres.relators))}-letter "
          f"presentation")
    print(f"backends available: {', '.join(backends)}\n")

    results = {}
    for name, kernel in backends.items():
        timings, defects = time_workload(kernel, letters, offsets, starts, args.repeat)
        results[name] = (timings, defects)
        total = sum(timings.values())
        print(f"[{name}]")
        for phase, seconds in timings.items():
            print(f"  {phase:<10} {seconds * 1e3:10.2f} ms")
        print(f"  {'total':<10} {total * 1e3:10.2f} ms\n")

    if len(results) == 2:
        compiled_t, compiled_d = results["compiled"]
        python_t, python_d = results["python"]
        print("speedup (python / compiled):")
        for phase in compiled_t:
            print(f"  {phase:<10} {python_t[phase] / compiled_t[phase]:8.1f}x")
        worst = max(abs(a - b) for a, b in zip(compiled_d, python_d))
        print(f"\nlargest final-defect discrepancy between backends: {worst:.3e}")


if __name__ == "__main__":
    main()
