#!/usr/bin/env python3
"""Benchmark the compiled vs pure-Python orientation-search kernels.

Runs identical workloads through both kernels and reports nodes/second plus
the speedup.  Workloads mix fast witness finds, a full exhaustion (the
6-vertex wheel, which is not word-representable), and a capped systematic
run on a larger instance so the inner loop dominates.

Usage: python benchmarks/bench_search.py [--budget N]
"""

import argparse
import time

from wordrep.graph import Graph, build_circulant, five_regular_spec
from wordrep.orientation import active_kernel, search_semi_transitive


def wheel(k: int) -> Graph:
    rim = [(i, (i + 1) % k) for i in range(k)]
    return Graph(k + 1, rim + [(i, k) for i in range(k)])


def workloads(cap):
    yield "W5 exhaustion", wheel(5), False, 10**7, "auto"
    yield "C_24(3,4,12) find", build_circulant(five_regular_spec(12, 3, 4)), True, cap, "auto"
    yield "C_28(9,11,14) find", build_circulant(five_regular_spec(14, 9, 11)), True, cap, "auto"
    yield "C_18(1,8,9) systematic cap", build_circulant(five_regular_spec(9, 1, 8)), True, cap, "exhaustive"


def run(kernel, cap):
    rows = []
    for name, g, vt, budget, mode in workloads(cap):
        t0 = time.perf_counter()
        out = search_semi_transitive(g, budget=budget, vertex_transitive=vt, kernel=kernel, mode=mode)
        dt = time.perf_counter() - t0
        rows.append((name, out.status, out.nodes, dt))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--budget", type=int, default=3_000_000,
                        help="node cap for the capped workloads")
    args = parser.parse_args()

    available = []
    try:
        active_kernel(8, "compiled")
        available.append("compiled")
    except RuntimeError:
        print("compiled kernel not built; benchmarking pure only")
    available.append("pure")

    results = {k: run(k, args.budget) for k in available}
    print(f"{'workload':34s} {'kernel':9s} {'status':17s} {'nodes':>12s} {'sec':>8s} {'nodes/s':>12s}")
    for i, (name, *_rest) in enumerate(results[available[0]]):
        for k in available:
            wname, status, nodes, dt = results[k][i]
            rate = nodes / dt if dt > 0 else float("inf")
            print(f"{wname:34s} {k:9s} {status:17s} {nodes:12d} {dt:8.3f} {rate:12.0f}")
        if len(available) == 2:
            a = results["compiled"][i]
            b = results["pure"][i]
            if a[1:3] != b[1:3]:
                print(f"  MISMATCH: compiled={a[1:3]} pure={b[1:3]}")
            elif a[3] > 0:
                print(f"  speedup: {b[3] / a[3]:.1f}x")


if __name__ == "__main__":
    main()
