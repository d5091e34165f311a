"""Brute-force ground truth: exact max-weight cliques in compatibility graphs.

A t-intersecting family on [n] is a clique in the graph whose vertices are
the sets of size >= t, with A ~ B when |A ∩ B| >= t.  Weights are scaled to
integers (p = a/b gives a^|A| (b-a)^(n-|A|)) so the search never leaves
exact integer arithmetic.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from . import kernels
from .family import PreconditionError, SetFamily, check_p

MAX_WEIGHTED_N = 6
MAX_ENUM_N = 5
MAX_UNIFORM_VERTICES = 64


def thread_count(threads: int | None = None) -> int:
    if threads is None:
        env = os.environ.get("AKX_THREADS")
        threads = int(env) if env else (os.cpu_count() or 1)
    return max(1, int(threads))


@dataclass(frozen=True)
class CliqueResult:
    best: int
    count: int
    cliques: tuple  # vertex-index bitmasks, sorted


def _greedy_lower_bound(adj, weights) -> int:
    order = sorted(range(len(adj)), key=lambda v: (-weights[v], v))
    clique = 0
    total = 0
    for v in order:
        if (adj[v] & clique) == clique:
            clique |= 1 << v
            total += weights[v]
    return total


def max_weight_clique(adj, weights, count: bool = True, collect: bool = False,
                      threads: int | None = None, impl=None) -> CliqueResult:
    """Maximum total weight of a clique, number of cliques reaching it, and optionally all of them.

    ``adj[v]`` is the neighbour bitmask of vertex v (no self bit).  Weights
    must be positive integers, which makes every optimum a maximal clique.
    The search splits into one branch per lowest vertex; branches run in a
    thread pool and merge in index order, so results do not depend on the
    thread count.
    """
    adj = [int(a) for a in adj]
    weights = [int(w) for w in weights]
    k = len(adj)
    if any(w <= 0 for w in weights):
        raise PreconditionError("positive weights", "clique weights must be positive")
    if k == 0:
        return CliqueResult(0, 1, (0,) if collect else ())
    lb = _greedy_lower_bound(adj, weights)
    # counting keeps ties at the lower bound; plain search needs a strict gain
    lower = lb if count else lb - 1
    adj_arr = np.array(adj, dtype=np.uint64) if k <= 64 else adj
    w_arr = np.array(weights, dtype=np.int64)

    def branch(v):
        higher = ~((1 << (v + 1)) - 1)
        return kernels.clique_branch(adj_arr, w_arr, adj[v] & higher, 1 << v, weights[v],
                                     lower, count, collect, impl=impl)

    nthreads = thread_count(threads)
    if nthreads > 1 and k > 8:
        with ThreadPoolExecutor(max_workers=nthreads) as pool:
            results = list(pool.map(branch, range(k)))
    else:
        results = [branch(v) for v in range(k)]

    best, total, found = None, 0, []
    for b_best, b_count, b_found in results:
        if b_count == 0:
            continue
        if best is None or b_best > best:
            best, total, found = b_best, b_count, list(b_found)
        elif b_best == best:
            total += b_count
            found.extend(b_found)
    if best is None:
        raise RuntimeError("clique search found nothing above its own lower bound")
    return CliqueResult(best, total if count else 1, tuple(sorted(found)))


def _intersection_graph(vertices, t):
    adj = []
    for i, a in enumerate(vertices):
        row = 0
        for j, b in enumerate(vertices):
            if i != j and (a & b).bit_count() >= t:
                row |= 1 << j
        adj.append(row)
    return adj


def _weighted_instance(n: int, t: int, p: Fraction):
    vertices = [mask for mask in range(1 << n) if mask.bit_count() >= t]
    a, b = p.numerator, p.denominator
    weights = [a ** v.bit_count() * (b - a) ** (n - v.bit_count()) for v in vertices]
    return vertices, _intersection_graph(vertices, t), weights, b**n


def _check_nt(n: int, t: int, cap: int):
    if t < 1 or n < t:
        raise PreconditionError("n >= t >= 1", f"invalid (n, t) = ({n}, {t})")
    if n > cap:
        raise PreconditionError(f"n <= {cap}", f"oracle cap is n <= {cap}, got {n}")


def max_weight_t_intersecting(n: int, t: int, p, count: bool = True,
                              threads: int | None = None) -> tuple[Fraction, int]:
    """Exact w(n,t,p) and the number of t-intersecting families attaining it."""
    _check_nt(n, t, MAX_WEIGHTED_N)
    p = check_p(p)
    vertices, adj, weights, scale = _weighted_instance(n, t, p)
    res = max_weight_clique(adj, weights, count=count, threads=threads)
    return Fraction(res.best, scale), res.count


def _clique_members(vertices, clique_mask):
    out = []
    v = 0
    while clique_mask:
        if clique_mask & 1:
            out.append(vertices[v])
        clique_mask >>= 1
        v += 1
    return out


def enumerate_optimal(n: int, t: int, p, threads: int | None = None) -> list[SetFamily]:
    """Every maximum-measure t-intersecting family, sorted by indicator integer."""
    _check_nt(n, t, MAX_ENUM_N)
    p = check_p(p)
    vertices, adj, weights, _ = _weighted_instance(n, t, p)
    res = max_weight_clique(adj, weights, count=True, collect=True, threads=threads)
    fams = [SetFamily.from_masks(n, _clique_members(vertices, c)) for c in res.cliques]
    return sorted(fams, key=lambda F: F.indicator_int)


def max_uniform_t_intersecting(n: int, k: int, t: int, collect: bool = False,
                               threads: int | None = None):
    """Largest t-intersecting subfamily of C([n], k) and the number of maximizers.

    With ``collect=True`` a third item lists the optimal families.
    """
    if not 0 <= k <= n or t < 1:
        raise PreconditionError("0 <= k <= n and t >= 1", f"invalid (n, k, t) = ({n}, {k}, {t})")
    if comb(n, k) > MAX_UNIFORM_VERTICES:
        raise PreconditionError("C(n,k) <= 64", f"C({n},{k}) = {comb(n, k)} exceeds 64")
    if k < t:
        empty = [SetFamily.empty(n)]
        return (0, 1, empty) if collect else (0, 1)
    vertices = [sum(1 << (e - 1) for e in c) for c in combinations(range(1, n + 1), k)]
    adj = _intersection_graph(vertices, t)
    res = max_weight_clique(adj, [1] * len(vertices), count=True, collect=collect, threads=threads)
    if not collect:
        return res.best, res.count
    fams = sorted((SetFamily.from_masks(n, _clique_members(vertices, c)) for c in res.cliques),
                  key=lambda F: F.indicator_int)
    return res.best, res.count, fams
