#!/usr/bin/env python3
"""Benchmark the compiled subset-enumeration kernels against the pure-Python
fallback on the same inputs.

Usage: python3 benchmarks/bench_kernels.py [--necklace N] [--euler-edges E]
"""

import argparse
import time

from ribbonpd import _kernel_py
from ribbonpd.families import generate, spec
from ribbonpd.ribbon import component_count, to_gem
from ribbonpd.theorems import _random_twisted

try:
    from ribbonpd import _kernel_cy
except ImportError:
    _kernel_cy = None


def timed(fn, *args):
    t0 = time.perf_counter()
    result = fn(*args)
    return result, time.perf_counter() - t0


def bench_planar(n):
    g = generate(spec("necklace", n))
    eu, ew = g.endpoint_arrays()
    total = 1 << g.edge_count
    print(f"genus counts, necklace({n}): {g.edge_count} edges, 2^{g.edge_count} subsets")
    r_py, t_py = timed(_kernel_py.planar_genus_counts, g.vertex_count, eu, ew, 0, total)
    print(f"  python : {t_py:8.3f}s")
    if _kernel_cy is not None:
        r_cy, t_cy = timed(_kernel_cy.planar_genus_counts, g.vertex_count, eu, ew, 0, total)
        assert r_py == r_cy, "kernel mismatch"
        print(f"  cython : {t_cy:8.3f}s   ({t_py / t_cy:6.1f}x faster)")


def bench_euler(e):
    g = _random_twisted(12345, max(2, e // 2), e)
    gem = to_gem(g)
    const = 2 * component_count(g) + g.edge_count - 2 * gem.isolated_vertices
    args = (g.edge_count, const, list(gem.s0), list(gem.s1), list(gem.s2))
    total = 1 << g.edge_count
    print(f"euler-genus counts, random twisted graph: {e} edges, 2^{e} subsets")
    r_py, t_py = timed(_kernel_py.euler_genus_counts, *args, 0, total)
    print(f"  python : {t_py:8.3f}s")
    if _kernel_cy is not None:
        r_cy, t_cy = timed(_kernel_cy.euler_genus_counts, *args, 0, total)
        assert r_py == r_cy, "kernel mismatch"
        print(f"  cython : {t_cy:8.3f}s   ({t_py / t_cy:6.1f}x faster)")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--necklace", type=int, default=6)
    ap.add_argument("--euler-edges", type=int, default=14)
    args = ap.parse_args()
    if _kernel_cy is None:
        print("compiled kernel not built; timing the pure-Python kernel only")
    bench_planar(args.necklace)
    bench_euler(args.euler_edges)


if __name__ == "__main__":
    main()
