#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Runs each kernel pair on identical inputs and prints a timing table
with speedups.  Workloads mirror the package's real hot paths: exact
determinants of small skew matrices, full even-subset minor scans,
early-exit bound scans, and whole-permutation canonical encodings.

    python benchmarks/bench_kernels.py [--repeat N]

Requires numba; run without arguments after `pip install -e .`.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from crtour import kernels


def random_skews(rng, count, n):
    mats = []
    for _ in range(count):
        a = np.zeros((n, n), np.int64)
        for i in range(n):
            for j in range(i + 1, n):
                a[i, j] = rng.choice((-1, 1))
                a[j, i] = -a[i, j]
        mats.append(a)
    return mats


def timed(fn, *args, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    impls = kernels.implementations()
    if "numba" not in impls:
        print("numba unavailable; nothing to compare", file=sys.stderr)
        return 1
    nb, py = impls["numba"], impls["numpy"]

    rng = np.random.default_rng(0)
    import random

    prng = random.Random(0)

    workloads = []

    dets = random_skews(prng, 3000, 10)

    def det_batch(impl):
        def run():
            acc = 0
            for m in dets:
                acc += int(impl(m))
            return acc

        return run

    workloads.append(
        ("bareiss_det, 3000 x order 10", det_batch(nb["bareiss_det"]),
         det_batch(py["bareiss_det"]))
    )

    scan12 = random_skews(prng, 1, 12)[0]
    workloads.append(
        (
            "max_even_minor, order 12 (4096 subsets)",
            lambda: nb["max_even_minor"](scan12),
            lambda: py["max_even_minor"](scan12),
        )
    )

    scan14 = random_skews(prng, 1, 14)[0]
    workloads.append(
        (
            "first_minor_above bound 10**6, order 14 (full scan)",
            lambda: nb["first_minor_above"](scan14, np.int64(10**6), np.int64(-1)),
            lambda: py["first_minor_above"](scan14, 10**6, -1),
        )
    )

    canon8 = random_skews(prng, 20, 8)
    workloads.append(
        (
            "perm_min_encoding, 20 x order 8 (40320 perms each)",
            lambda: [int(nb["perm_min_encoding"](m)) for m in canon8],
            lambda: [py["perm_min_encoding"](m) for m in canon8],
        )
    )

    workloads.append(
        (
            "perm_aut_count, 20 x order 8",
            lambda: [int(nb["perm_aut_count"](m)) for m in canon8],
            lambda: [py["perm_aut_count"](m) for m in canon8],
        )
    )

    # warm the jit once so compilation stays out of the timings
    nb["bareiss_det"](dets[0])
    nb["max_even_minor"](dets[0])
    nb["first_minor_above"](dets[0], np.int64(1), np.int64(-1))
    nb["perm_min_encoding"](canon8[0])
    nb["perm_aut_count"](canon8[0])

    print(f"{'workload':55s} {'numba':>10s} {'numpy':>10s} {'speedup':>8s}")
    for name, f_nb, f_py in workloads:
        t_nb, r_nb = timed(f_nb, repeat=args.repeat)
        t_py, r_py = timed(f_py, repeat=args.repeat)
        if r_nb != r_py:
            print(f"{name}: BACKEND MISMATCH {r_nb!r} vs {r_py!r}", file=sys.stderr)
            return 1
        print(
            f"{name:55s} {t_nb * 1e3:9.1f}ms {t_py * 1e3:9.1f}ms "
            f"{t_py / t_nb:7.1f}x"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
