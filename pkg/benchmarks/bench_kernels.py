"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each workload runs through both backends; results are checked equal before
timings are reported.
"""

import argparse
import random
import statistics
import time
from fractions import Fraction

import numpy as np

from akx import _fallback, kernels
from akx.oracle import _weighted_instance, max_weight_clique


def clique_workload(n, t, p):
    _, adj, weights, _ = _weighted_instance(n, t, p)

    def run(impl):
        res = max_weight_clique(adj, weights, count=True, threads=1, impl=impl)
        return res.best, res.count

    return f"weighted clique n={n} t={t} p={p}", run


def meet_workload(size, n, t, seed=0):
    rng = np.random.default_rng(seed)
    # a shared core of t points makes every pair pass, so the whole scan runs
    a = (rng.integers(0, 1 << n, size=size) | ((1 << t) - 1)).astype(np.uint64)

    def run(impl):
        return impl.all_pairs_meet(a, a, t)

    return f"all-pairs meet {size} masks t={t}", run


def unstable_workload(n, count, seed=1):
    rng = np.random.default_rng(seed)
    fams = [rng.random(1 << n) < 0.5 for _ in range(count)]

    def run(impl):
        return [impl.find_unstable(ind, n) for ind in fams]

    return f"find unstable pair, {count} families n={n}", run


def half_integral_workload(k, seed=2):
    rng = random.Random(seed)
    adj = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if rng.random() < 0.25:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    weights = [rng.randint(1, 20) for _ in range(k)]
    adj_arr = np.array(adj, dtype=np.uint64)
    w_arr = np.array(weights, dtype=np.int64)

    def run(impl):
        if impl is _fallback:
            return tuple(map(int, impl.half_integral_exhaustive(adj, 0, weights)))
        return tuple(map(int, impl.half_integral_exhaustive(adj_arr, 0, w_arr)))

    return f"half-integral exhaustive, {k} vertices", run


def timed(fn, impl, repeat):
    samples, result = [], None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(impl)
        samples.append(time.perf_counter() - start)
    return statistics.median(samples), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if kernels.BACKEND != "cython":
        print("compiled extension not available; only the fallback can be timed")
    workloads = [
        clique_workload(5, 1, Fraction(1, 2)),
        clique_workload(6, 1, Fraction(2, 5)),
        clique_workload(6, 2, Fraction(1, 2)),
        meet_workload(2000, 16, 3),
        unstable_workload(7, 50),
        half_integral_workload(16),
    ]
    print(f"{'workload':45} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, fn in workloads:
        slow, expected = timed(fn, _fallback, args.repeat)
        if kernels.BACKEND == "cython":
            fast, got = timed(fn, kernels._impl, args.repeat)
            if got != expected:
                raise SystemExit(f"backends disagree on {name}: {got} != {expected}")
            print(f"{name:45} {slow:10.4f} {fast:10.4f} {slow / fast:8.1f}x")
        else:
            print(f"{name:45} {slow:10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
