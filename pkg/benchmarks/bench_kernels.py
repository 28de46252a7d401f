#!/usr/bin/env python
"""
Compare the numba and numpy kernels.

Usage:
    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --orders 12 16 20 --toeplitz 5 6 7
"""
import argparse
import time

import numpy as np

from weighmat import kernels
from weighmat._accel import NUMBA_AVAILABLE


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def dfs(n, k, ring):
    undet = kernels.undetermined_table(n)
    out = np.zeros((1 << 16, n), dtype=np.int8)
    found = kernels.dfs_search_numba(n, k, ring, np.zeros(0, np.int8), True, undet, out, 1 << 62)
    return out[:found]


def toeplitz_numba(n):
    out = np.zeros(3 ** (2 * n - 1), dtype=np.int8)
    kernels.toeplitz_weights_numba(n, out)
    return out


def warmup():
    dfs(4, 3, -1)
    toeplitz_numba(2)


def bench_search(orders):
    print("\nconference search (both rings, exhaustive)")
    print(f"{'n':>4} {'hits':>6} {'numba (s)':>11} {'numpy (s)':>11} {'speedup':>9}")
    print("-" * 45)
    for n in orders:
        t_nb = t_np = 0.0
        hits = 0
        for ring in (1, -1):
            a, t = timed(kernels.bfs_search, n, n - 1, ring)
            t_np += t
            hits += a.shape[0]
            if NUMBA_AVAILABLE:
                b, t = timed(dfs, n, n - 1, ring)
                t_nb += t
                assert np.array_equal(a, b)
        nb = f"{t_nb:>11.4f}" if NUMBA_AVAILABLE else f"{'-':>11}"
        sp = f"{t_np / t_nb:>8.1f}x" if NUMBA_AVAILABLE and t_nb > 0 else f"{'-':>9}"
        print(f"{n:>4} {hits:>6} {nb} {t_np:>11.4f} {sp}")


def bench_toeplitz(orders):
    print("\nconstant-diagonal enumeration (all 3^(2n-1) specs)")
    print(f"{'n':>4} {'specs':>10} {'numba (s)':>11} {'numpy (s)':>11} {'speedup':>9}")
    print("-" * 49)
    for n in orders:
        a, t_np = timed(kernels.toeplitz_weights_numpy, n)
        if NUMBA_AVAILABLE:
            b, t_nb = timed(toeplitz_numba, n)
            assert np.array_equal(a, b)
            print(f"{n:>4} {a.size:>10} {t_nb:>11.4f} {t_np:>11.4f} {t_np / t_nb:>8.1f}x")
        else:
            print(f"{n:>4} {a.size:>10} {'-':>11} {t_np:>11.4f} {'-':>9}")


def main():
    parser = argparse.ArgumentParser(description="numba vs numpy kernel timings")
    parser.add_argument("--orders", type=int, nargs="+", default=[10, 12, 14, 16, 18, 20])
    parser.add_argument("--toeplitz", type=int, nargs="+", default=[4, 5, 6, 7])
    args = parser.parse_args()

    print(f"numba available: {NUMBA_AVAILABLE}")
    if NUMBA_AVAILABLE:
        warmup()
    bench_search(args.orders)
    bench_toeplitz(args.toeplitz)


if __name__ == "__main__":
    main()
