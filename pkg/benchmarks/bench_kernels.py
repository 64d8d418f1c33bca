#!/usr/bin/env python3
"""Benchmark the compiled subset-scan kernels against the pure fallback.

Times the powerset rank-table build and the full rank-axiom scan on the
crossed prism.  Run as:  python benchmarks/bench_kernels.py [--n 4] [--repeat 3]
"""

import argparse
import time

from matroid_forge._kernels import BACKEND, backend_module
from matroid_forge.family import build_crossed_prism


def best_of(repeat, fn, *args):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=4, help="ring size (default 4)")
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument(
        "--force-pure",
        action="store_true",
        help="time the pure backend even above 2^20 subsets (minutes of runtime)",
    )
    args = parser.parse_args()

    fam = build_crossed_prism(args.n)
    g = fam.graph
    ends_a = [a for a, _ in g.ends]
    ends_b = [b for _, b in g.ends]
    print(f"ring size n={args.n}: {g.n_vertices} vertices, {g.m} edges, "
          f"2^{g.m} subsets; active backend: {BACKEND}")

    backends = {}
    backends["pure"] = backend_module("pure")
    try:
        backends["compiled"] = backend_module("compiled")
    except ImportError:
        print("compiled extension not built; benchmarking pure only")

    timings = {}
    tables = {}
    for name, impl in backends.items():
        t_build, (lift, _frame) = best_of(
            args.repeat, impl.rank_tables, g.n_vertices, ends_a, ends_b
        )
        t_scan, (checked, violations, _w) = best_of(
            args.repeat, impl.scan_axioms_table, lift, g.m
        )
        timings[name] = (t_build, t_scan)
        tables[name] = bytes(lift)
        print(f"{name:>9}: rank tables {t_build * 1e3:9.2f} ms   "
              f"axiom scan {t_scan * 1e3:9.2f} ms  "
              f"({checked} quadruples, {violations} violations)")

    if len(tables) == 2:
        assert tables["pure"] == tables["compiled"], "backends disagree"
        build_speedup = timings["pure"][0] / timings["compiled"][0]
        scan_speedup = timings["pure"][1] / timings["compiled"][1]
        print(f"  speedup: rank tables x{build_speedup:.1f}, axiom scan x{scan_speedup:.1f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
