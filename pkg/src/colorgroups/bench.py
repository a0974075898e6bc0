"""Backend benchmark: numba kernels vs the pure-numpy fallback.

Times stabilizer-chain construction over a bundle of tree colorings and a
brute-force centralizer scan, checks that both backends agree exactly, and
prints a comparison table.  Run as `colorgroups bench` or
`python -m colorgroups.bench`.
"""

from __future__ import annotations

import math
import time
from itertools import permutations

import numpy as np

from . import backend
from .analysis import generators
from .trees import free_trees, proper_colorings, tree_with_coloring


def _workload(degree):
    mats = []
    for tree in free_trees(degree):
        for coloring in proper_colorings(tree):
            graph = tree_with_coloring(tree, coloring)
            taus = generators(graph)
            mats.append(np.array([t.images for t in taus], dtype=np.int64))
    return mats


def _time_orders(kernels, mats, degree, repeat):
    best = math.inf
    orders = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        orders = [math.prod(int(x) for x in kernels.build_chain(m, degree)[4])
                  for m in mats]
        best = min(best, time.perf_counter() - t0)
    return best, orders


def _time_centralizer(kernels, repeat):
    n = 7
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    gens = np.array([[1, 0, 3, 2, 4, 5, 6],
                     [0, 2, 1, 4, 3, 6, 5],
                     [1, 2, 0, 3, 4, 5, 6]], dtype=np.int64)
    best = math.inf
    count = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        mask = kernels.centralizer_mask(perms, gens)
        count = int(mask.sum())
        best = min(best, time.perf_counter() - t0)
    return best, count


def run_benchmark(repeat=3, degree=9):
    names = backend.available_backends()
    mats = _workload(degree)
    print(f"workload: {len(mats)} coloring groups of degree {degree}, "
          f"best of {repeat}")
    results = {}
    for name in names:
        kernels = backend.resolve_backend(name)[1]
        if name == "numba":  # trigger compilation outside the timed region
            kernels.build_chain(mats[0], degree)
            _time_centralizer(kernels, 1)
        t_orders, orders = _time_orders(kernels, mats, degree, repeat)
        t_cent, count = _time_centralizer(kernels, repeat)
        results[name] = (t_orders, orders, t_cent, count)
        print(f"{name:>6}: chain build {t_orders:8.3f}s   "
              f"centralizer scan {t_cent:8.4f}s")
    if len(results) == 2:
        a, b = results["numba"], results["numpy"]
        if a[1] != b[1] or a[3] != b[3]:
            raise AssertionError("backends disagree")
        print(f"agreement: identical orders and centralizer counts")
        print(f"speedup:   chain build x{b[0] / a[0]:.1f}, "
              f"centralizer x{b[2] / a[2]:.1f}")
    return results


if __name__ == "__main__":
    run_benchmark()
