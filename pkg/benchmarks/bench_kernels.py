#!/usr/bin/env python3
"""Time the compiled and pure-Python elimination kernels on the same inputs.

Workloads are boundary matrices of catalog complexes (and their barycentric
subdivisions) plus random sparse integer matrices.  Every timing also checks
that both backends return identical results.  Random matrices whose
elimination leaves the int64 range fall back to Python inside the compiled
path, so their speedup stays near 1.

    python benchmarks/bench_kernels.py --repeats 3
"""

import argparse
import random
import sys
import time

from strathom import _kernels, catalog
from strathom.algebra import ZZ, ExactMatrix
from strathom.complex import barycentric_subdivide


def workloads(subdivisions, seed, random_count, random_size):
    for name in ("torus", "pinched_torus", "nodal_genus1"):
        X = catalog.build(name).complex
        for k in range(subdivisions + 1):
            for i in range(1, X.dim + 1):
                yield f"{name} sd{k} d{i}", X.boundary_matrix(i)
            if k < subdivisions:
                X = barycentric_subdivide(X)
    X = catalog.build("product", left="pinched_torus", right="sphere").complex
    for i in range(1, X.dim + 1):
        yield f"pinched x sphere d{i}", X.boundary_matrix(i)
    rng = random.Random(seed)
    for r in range(random_count):
        rows = [[rng.randint(-20, 20) if rng.random() < 0.15 else 0 for _ in range(random_size)]
                for _ in range(random_size)]
        yield f"random {random_size}x{random_size} #{r}", ExactMatrix.from_rows(ZZ, rows)


def best_of(fn, repeats):
    best, value = float("inf"), None
    for _ in range(repeats):
        start = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - start)
    return best, value


def main(argv=None):
    p = argparse.ArgumentParser(description="Compare the Cython and pure-Python kernels.")
    p.add_argument("--repeats", type=int, default=3, help="timings per case; the best is reported")
    p.add_argument("--subdivisions", type=int, default=1, help="barycentric subdivisions of each catalog complex")
    p.add_argument("--random", type=int, default=2, help="number of random matrices")
    p.add_argument("--size", type=int, default=40, help="side of the random matrices")
    p.add_argument("--seed", type=int, default=7)
    args = p.parse_args(argv)

    if _kernels._ckernels is None:
        print("compiled kernels are not built; only the Python backend is available", file=sys.stderr)
        return 1

    header = f"{'case':28s} {'kernel':10s} {'shape':>10s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    totals = {"python": 0.0, "cython": 0.0}
    for label, M in workloads(args.subdivisions, args.seed, args.random, args.size):
        rows, cols = M.row_dicts(), M.column_dicts()
        cases = {
            "snf": lambda b: _kernels.invariant_factors(ZZ, rows, M.cols, backend=b),
            "kernel": lambda b: _kernels.column_echelon_kernel(ZZ, cols, M.rows, backend=b),
        }
        for kname, fn in cases.items():
            tp, vp = best_of(lambda: fn("python"), args.repeats)
            tc, vc = best_of(lambda: fn("cython"), args.repeats)
            if vp != vc:
                print(f"MISMATCH on {label} ({kname})", file=sys.stderr)
                return 1
            totals["python"] += tp
            totals["cython"] += tc
            shape = f"{M.rows}x{M.cols}"
            print(f"{label:28s} {kname:10s} {shape:>10s} {tp:10.4f} {tc:10.4f} {tp / max(tc, 1e-9):7.1f}x")
    print("-" * len(header))
    print(f"{'total':28s} {'':10s} {'':>10s} {totals['python']:10.4f} {totals['cython']:10.4f} "
          f"{totals['python'] / max(totals['cython'], 1e-9):7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
