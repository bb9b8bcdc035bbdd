"""Compare the numba kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

The first numba call is timed separately (JIT compile or cache load).
"""
import argparse
import time

import numpy as np

from zdgraph.graph import random_graph
from zdgraph.kernels import numba_kernels, numpy_kernels
from zdgraph.threshold import random_threshold


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    rng = np.random.default_rng(0)
    values = rng.integers(0, 3**12, size=1500).astype(np.int64)
    yield "modular_zero_products (1500 elems)", "modular_zero_products", (values, 3**12)
    masks = rng.integers(0, 2**40, size=2000, dtype=np.uint64)
    yield "disjoint_masks (2000 masks)", "disjoint_masks", (masks,)
    # a threshold graph has no forbidden quad, so every 4-subset is scanned
    g = random_threshold(60, 1)
    yield "first_forbidden_quad (threshold, n=60)", "first_forbidden_quad", (g.to_matrix(),)
    g = random_graph(60, 1)
    yield "first_forbidden_quad (random, n=60)", "first_forbidden_quad", (g.to_matrix(),)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if numba_kernels is None:
        print("numba not importable; only the numpy path is available")
    print(f"{'kernel':44s} {'numpy s':>10s} {'numba s':>10s} {'first call':>10s} {'speedup':>8s}")
    for label, name, call_args in cases():
        t_np = best_of(getattr(numpy_kernels, name), call_args, args.repeat)
        if numba_kernels is None:
            print(f"{label:44s} {t_np:10.4f}")
            continue
        fn = getattr(numba_kernels, name)
        t0 = time.perf_counter()
        first = fn(*call_args)
        t_first = time.perf_counter() - t0
        t_nb = best_of(fn, call_args, args.repeat)
        assert np.array_equal(first, getattr(numpy_kernels, name)(*call_args)), name
        print(f"{label:44s} {t_np:10.4f} {t_nb:10.4f} {t_first:10.4f} {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
