"""Pure-Python versions of the compiled kernels in ``_kernels.pyx``.

Same signatures, same results; used when the extension is not built or
when inputs exceed the fixed-width limits of the compiled code.
"""

from itertools import combinations

import numpy as np


def _color_bound(adj, w, cand):
    bound = 0
    rest = cand
    while rest:
        q = rest
        cls = 0
        while q:
            low = q & -q
            v = low.bit_length() - 1
            if w[v] > cls:
                cls = w[v]
            rest &= ~low
            q &= ~(adj[v] | low)
        bound += cls
    return bound


def _mask_weight(w, mask):
    total = 0
    while mask:
        low = mask & -mask
        total += w[low.bit_length() - 1]
        mask ^= low
    return total


def clique_branch(adj, weights, cand, clique, weight, lower, counting, collect,
                  max_collect=1 << 40):
    adj = [int(a) for a in adj]
    w = [int(x) for x in weights]
    state = {"best": lower, "count": 0}
    found = []

    def expand(cand, clique, weight):
        best = state["best"]
        if weight > best:
            state["best"] = best = weight
            state["count"] = 1
            if collect:
                found.clear()
                found.append(clique)
        elif weight == best and counting:
            state["count"] += 1
            if collect and len(found) < max_collect:
                found.append(clique)
        if not cand:
            return
        bound = weight + _color_bound(adj, w, cand)
        if bound < best or (not counting and bound == best):
            return
        rest = cand
        while rest:
            bound = weight + _mask_weight(w, rest)
            best = state["best"]
            if bound < best or (not counting and bound == best):
                return
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            expand(rest & adj[v], clique | low, weight + w[v])

    expand(cand, clique, weight)
    if state["best"] == lower and state["count"] == 0:
        return lower, 0, []
    return state["best"], state["count"], found


def all_pairs_meet(a, b, t):
    for x in a:
        x = int(x)
        for y in b:
            if (x & int(y)).bit_count() < t:
                return False
    return True


def find_unstable(indicator, n):
    ind = np.asarray(indicator, dtype=bool)
    idx = np.arange(1 << n, dtype=np.int64)
    members = idx[ind]
    if members.size == 0:
        return None
    points = range(n)
    for s in range((n - 1) // 2 + 1):
        for a_pts in sorted(combinations(points, s), key=lambda c: sum(1 << i for i in c)):
            amask = sum(1 << i for i in a_pts)
            has_a = members[(members & amask) == amask]
            if has_a.size == 0:
                continue
            rest = [i for i in points if not (amask >> i) & 1]
            b_masks = sorted(sum(1 << i for i in c) for c in combinations(rest, s + 1))
            for bmask in b_masks:
                src = has_a[(has_a & bmask) == 0]
                if src.size and not ind[(src & ~amask) | bmask].all():
                    return amask, bmask
    return None


def half_integral_exhaustive(adj, loops, weights):
    adj = [int(a) for a in adj]
    w = [int(x) for x in weights]
    k = len(adj)
    if k > 30:
        raise ValueError("exhaustive half-integral search is capped at 30 vertices")
    full = (1 << k) - 1
    best, best_i, count = -1, 0, 0
    for ind_set in range(1 << k):
        if ind_set & loops:
            continue
        nb = 0
        ones = 0
        x = ind_set
        while x:
            low = x & -x
            v = low.bit_length() - 1
            nb |= adj[v]
            ones += w[v]
            x ^= low
        if nb & ind_set:
            continue
        val = 2 * ones + _mask_weight(w, full & ~(ind_set | nb))
        if val > best:
            best, best_i, count = val, ind_set, 1
        elif val == best:
            count += 1
    return best, best_i, count
