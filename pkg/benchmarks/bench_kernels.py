#!/usr/bin/env python3
"""Timing comparison: compiled shooting kernels vs the pure-Python fallback.

Runs the same randomized bound-checking workload in two subprocesses, one
with the numba kernels (default) and one with ROBINSL_NO_JIT=1, and reports
cold-start, warm workload, and per-solve times.

Usage: python benchmarks/bench_kernels.py [--n 2000]
"""

import argparse
import json
import os
import subprocess
import sys
import time


def _inner(n):
    t_import = time.perf_counter()
    import robinsl as rs

    bc = rs.RobinBC(0.25, 0.5)
    q = rs.Potential(segments=(rs.Segment(0.1, 0.6, 3.0),), atoms=(rs.DeltaAtom(0.7, -1.5),))
    rs.lambda1_value(q, bc, 1e-12)
    cold = time.perf_counter() - t_import

    t0 = time.perf_counter()
    report = rs.check_bounds(bc, n, 8, 1)
    workload = time.perf_counter() - t0

    reps = 200
    t0 = time.perf_counter()
    for _ in range(reps):
        rs.lambda1_value(q, bc, 1e-12)
    per_solve = (time.perf_counter() - t0) / reps

    print(
        json.dumps(
            {
                "jit": rs.JIT_ENABLED,
                "cold_import_plus_first_solve_s": cold,
                "workload_s": workload,
                "workload_solves": report.n_samples,
                "per_solve_us": per_solve * 1e6,
            }
        )
    )


def _run_mode(no_jit, n):
    env = dict(os.environ)
    env["ROBINSL_NO_JIT"] = "1" if no_jit else ""
    res = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--inner", str(n)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(res.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=2000, help="bound-check samples per sign class")
    ap.add_argument("--inner", type=int, default=None, help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.inner is not None:
        _inner(args.inner)
        return

    print(f"workload: check_bounds(RobinBC(0.25, 0.5), n={args.n}, pieces_max=8)")
    rows = []
    for label, no_jit in (("numba kernels", False), ("pure fallback ", True)):
        r = _run_mode(no_jit, args.n)
        rows.append((label, r))
        print(
            f"  {label}: cold start {r['cold_import_plus_first_solve_s']:7.2f}s   "
            f"workload ({r['workload_solves']} solves) {r['workload_s']:7.2f}s   "
            f"per solve {r['per_solve_us']:8.1f}us"
        )
    speedup = rows[1][1]["workload_s"] / rows[0][1]["workload_s"]
    print(f"  warm speedup: {speedup:.1f}x")


if __name__ == "__main__":
    main()
