#!/usr/bin/env python3
"""Benchmark the compiled Chow product kernel against the pure fallback.

Run from the repository root:

    python benchmarks/bench_kernels.py [--products N] [--ranks 3,6,10]

Also times two end-to-end workloads that exercise the kernel the way the
CLI does: a genus sweep and an oracle-style sampling loop.
"""

from __future__ import annotations

import argparse
import random
import time

from scrollslopes import _backend, _pure
from scrollslopes.report import document_for_sweep


def time_kernel(kernel, cases) -> float:
    start = time.perf_counter()
    for r, c1, x, y in cases:
        kernel(r, c1, x, y)
    return time.perf_counter() - start


def make_cases(rng: random.Random, r: int, n: int):
    def dense():
        return [rng.randint(-50, 50) for _ in range(2 * r)]

    return [(r, rng.randint(-10, 10), dense(), dense()) for _ in range(n)]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--products", type=int, default=200_000)
    parser.add_argument("--ranks", default="3,6,10")
    args = parser.parse_args()

    rng = random.Random(1)
    ranks = [int(t) for t in args.ranks.split(",")]

    print(f"active backend: {_backend.backend_name()}")
    print(f"{'rank':>4}  {'pure (ops/s)':>14}  {'compiled (ops/s)':>17}  {'speedup':>8}")
    for r in ranks:
        cases = make_cases(rng, r, args.products)
        pure_t = time_kernel(_pure.mul_reduce, cases)
        pure_rate = len(cases) / pure_t
        if _backend.have_speedups():
            fast_t = time_kernel(_backend._speedups.mul_reduce, cases)
            fast_rate = len(cases) / fast_t
            print(f"{r:>4}  {pure_rate:>14.0f}  {fast_rate:>17.0f}  {fast_t and pure_t / fast_t:>8.2f}x")
        else:
            print(f"{r:>4}  {pure_rate:>14.0f}  {'(not built)':>17}  {'':>8}")

    # end-to-end: full verdict sweep through whichever backend is active
    start = time.perf_counter()
    document_for_sweep(6, 500)
    print(f"\nverdict sweep 6..500 via {_backend.backend_name()} backend: "
          f"{time.perf_counter() - start:.3f}s")


if __name__ == "__main__":
    main()
