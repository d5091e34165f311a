# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: bitset clique search, pairwise intersection checks,
heavy-shift stability scan and exhaustive half-integral search.

Every function here has a pure-Python twin in ``akx._fallback`` with the
same signature and the same results.
"""

from libc.stdint cimport uint64_t, int64_t
from libcpp.vector cimport vector

import numpy as np


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popcount64(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef struct SearchState:
    const uint64_t* adj
    const int64_t* w
    int64_t best
    int64_t count
    int counting
    int collect
    int64_t max_collect


cdef int64_t color_bound(SearchState* st, uint64_t cand) nogil:
    cdef uint64_t rest = cand, q
    cdef int64_t bound = 0, cls
    cdef int v
    while rest:
        q = rest
        cls = 0
        while q:
            v = lowbit(q)
            if st.w[v] > cls:
                cls = st.w[v]
            rest &= ~((<uint64_t>1) << v)
            q &= ~(st.adj[v] | ((<uint64_t>1) << v))
        bound += cls
    return bound


cdef int64_t mask_weight(SearchState* st, uint64_t mask) nogil:
    cdef int64_t total = 0
    while mask:
        total += st.w[lowbit(mask)]
        mask &= mask - 1
    return total


cdef void expand(SearchState* st, uint64_t cand, uint64_t clique, int64_t weight,
                 vector[uint64_t]* found) nogil:
    cdef int v
    cdef uint64_t bit, rest
    if weight > st.best:
        st.best = weight
        st.count = 1
        if st.collect:
            found.clear()
            found.push_back(clique)
    elif weight == st.best and st.counting:
        st.count += 1
        if st.collect and <int64_t>found.size() < st.max_collect:
            found.push_back(clique)
    if cand == 0:
        return
    if st.counting:
        if weight + color_bound(st, cand) < st.best:
            return
    elif weight + color_bound(st, cand) <= st.best:
        return
    rest = cand
    while rest:
        if st.counting:
            if weight + mask_weight(st, rest) < st.best:
                return
        elif weight + mask_weight(st, rest) <= st.best:
            return
        v = lowbit(rest)
        bit = (<uint64_t>1) << v
        rest &= ~bit
        expand(st, rest & st.adj[v], clique | bit, weight + st.w[v], found)


def clique_branch(adj, weights, unsigned long long cand, unsigned long long clique,
                  long long weight, long long lower, bint counting, bint collect,
                  long long max_collect=1 << 40):
    """Search all cliques ``clique | X`` with ``X`` a clique inside ``cand``.

    Returns ``(best, count, masks)``; ``best`` stays at ``lower`` with count 0
    when nothing reaches ``lower``.
    """
    cdef uint64_t[::1] adj_v = np.ascontiguousarray(adj, dtype=np.uint64)
    cdef int64_t[::1] w_v = np.ascontiguousarray(weights, dtype=np.int64)
    cdef SearchState st
    cdef vector[uint64_t] found
    st.adj = &adj_v[0] if adj_v.shape[0] else NULL
    st.w = &w_v[0] if w_v.shape[0] else NULL
    st.best = lower
    st.count = 0
    st.counting = counting
    st.collect = collect
    st.max_collect = max_collect
    with nogil:
        expand(&st, cand, clique, weight, &found)
    if st.best == lower and st.count == 0:
        return lower, 0, []
    return st.best, st.count, [found[i] for i in range(found.size())]


def all_pairs_meet(a, b, int t):
    """True iff ``popcount(x & y) >= t`` for every ``x`` in ``a`` and ``y`` in ``b``."""
    cdef uint64_t[::1] av = np.ascontiguousarray(a, dtype=np.uint64)
    cdef uint64_t[::1] bv = np.ascontiguousarray(b, dtype=np.uint64)
    cdef Py_ssize_t i, j
    cdef bint ok = True
    with nogil:
        for i in range(av.shape[0]):
            for j in range(bv.shape[0]):
                if popcount64(av[i] & bv[j]) < t:
                    ok = False
                    break
            if not ok:
                break
    return ok


cdef bint shift_moves(const unsigned char* ind, uint64_t full, uint64_t amask,
                      uint64_t bmask) nogil:
    # some S ⊇ A, S ∩ B = ∅ in the family whose image (S∖A)∪B is absent
    cdef uint64_t free = full & ~(amask | bmask)
    cdef uint64_t sub = free
    cdef uint64_t s
    while True:
        s = amask | sub
        if ind[s] and not ind[(s & ~amask) | bmask]:
            return True
        if sub == 0:
            break
        sub = (sub - 1) & free
    return False


def find_unstable(indicator, int n):
    """First ``(A, B)`` with ``|B| = |A| + 1`` whose heavy shift changes the family.

    Pairs are scanned by ``|A|``, then ``A`` mask, then ``B`` mask.  Returns
    ``None`` when the family is ``(s, s+1)``-stable for every ``s``.
    """
    cdef const unsigned char[::1] ind = np.ascontiguousarray(indicator, dtype=np.uint8)
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef uint64_t amask, bmask, size = (<uint64_t>1) << n
    cdef int s
    cdef long long ra = -1, rb = -1
    with nogil:
        for s in range((n - 1) // 2 + 1):
            for amask in range(size):
                if popcount64(amask) != s:
                    continue
                for bmask in range(size):
                    if bmask & amask or popcount64(bmask) != s + 1:
                        continue
                    if shift_moves(&ind[0], full, amask, bmask):
                        ra = amask
                        rb = bmask
                        break
                if ra >= 0:
                    break
            if ra >= 0:
                break
    if ra < 0:
        return None
    return int(ra), int(rb)


def half_integral_exhaustive(adj, loops, weights):
    """Best half-integral objective (doubled) over the fractional stable set program.

    Every half-integral optimum puts 1 on an independent set ``I`` of
    loop-free vertices, 0 on its neighbours and 1/2 elsewhere, so scanning
    independent sets is exhaustive.  Returns ``(2 * best, best_I, count)``
    where ``best_I`` is the smallest optimal mask.
    """
    cdef uint64_t[::1] adj_v = np.ascontiguousarray(adj, dtype=np.uint64)
    cdef int64_t[::1] w_v = np.ascontiguousarray(weights, dtype=np.int64)
    cdef uint64_t loop_mask = loops
    cdef int k = adj_v.shape[0]
    cdef uint64_t full = ((<uint64_t>1) << k) - 1 if k < 64 else <uint64_t>(-1)
    cdef uint64_t ind_set, nb, rest, x
    cdef int64_t val, best = -1, count = 0
    cdef uint64_t best_i = 0
    cdef int v
    cdef int64_t ones
    if k > 30:
        raise ValueError("exhaustive half-integral search is capped at 30 vertices")
    with nogil:
        for ind_set in range((<uint64_t>1) << k):
            if ind_set & loop_mask:
                continue
            nb = 0
            ones = 0
            x = ind_set
            while x:
                v = lowbit(x)
                nb |= adj_v[v]
                ones += w_v[v]
                x &= x - 1
            if nb & ind_set:
                continue
            rest = full & ~(ind_set | nb)
            val = 2 * ones
            x = rest
            while x:
                val += w_v[lowbit(x)]
                x &= x - 1
            if val > best:
                best = val
                best_i = ind_set
                count = 1
            elif val == best:
                count += 1
    return int(best), int(best_i), int(count)
