"""Passing between k-uniform families on [n] and μ_p on a fixed window."""

from __future__ import annotations

from fractions import Fraction
from math import comb, floor, perm

import numpy as np

from .family import PreconditionError, SetFamily, check_p, measure


def uniform_frankl_count(n: int, k: int, t: int, r: int) -> int:
    """|{A in C([n], k) : |A ∩ [t+2r]| >= t+r}|.

    Only t + 2r <= n is required; k < t + r gives 0.
    """
    if t < 1 or r < 0 or not 0 <= k <= n or t + 2 * r > n:
        raise PreconditionError("t >= 1, r >= 0, t+2r <= n, 0 <= k <= n",
                                f"invalid (n, k, t, r) = ({n}, {k}, {t}, {r})")
    w = t + 2 * r
    return sum(comb(w, j) * comb(n - w, k - j) for j in range(t + r, w + 1) if k - j >= 0)


def falling(x: int, k: int) -> int:
    return perm(x, k) if 0 <= k <= x else 0


def lifted_measure(H: SetFamily, n: int, k: int) -> Fraction:
    """Probability that a uniform k-subset of [n] meets [m] in a member of H."""
    m = H.n
    if not (0 <= k <= n and m <= n):
        raise PreconditionError("0 <= k <= n and m <= n", f"invalid (m, n, k) = ({m}, {n}, {k})")
    total = 0
    for size, count in enumerate(H.level_counts()):
        if count:
            total += int(count) * falling(k, size) * falling(n - k, m - size)
    return Fraction(total, falling(n, m))


def lifted_count(H: SetFamily, n: int, k: int) -> int:
    """|{A in C([n], k) : A ∩ [m] in H}| counted by extension, for cross-checks."""
    m = H.n
    return sum(int(c) * comb(n - m, k - size) for size, c in enumerate(H.level_counts())
               if c and 0 <= k - size)


def convergence_probe(H: SetFamily, p, n_list) -> list[tuple[int, Fraction]]:
    """Exact gaps |lifted_measure(H, n, ⌊pn⌋) - μ_p(H)| along n_list."""
    p = check_p(p)
    target = measure(H, p)
    out = []
    for n in n_list:
        k = floor(p * n)
        out.append((n, abs(lifted_measure(H, n, k) - target)))
    return out


def folded_measure(F: SetFamily, p) -> Fraction:
    """μ_p(F) by integrating out one coordinate at a time."""
    p = check_p(p)
    q = 1 - p
    vals = np.where(F.indicator, Fraction(1), Fraction(0)).astype(object)
    for _ in range(F.n):
        # the highest point is the outermost axis
        vals = vals.reshape(2, -1)
        vals = vals[0] * q + vals[1] * p
    return Fraction(vals.reshape(-1)[0])


def level_sum(F: SetFamily, p) -> Fraction:
    p = check_p(p)
    return sum((p**k * (1 - p) ** (F.n - k) * int(c) for k, c in enumerate(F.level_counts())),
               Fraction(0))


def level_sum_identity(F: SetFamily, p) -> bool:
    """μ_p(F) equals the level decomposition Σ_k p^k (1-p)^(n-k) |F^{=k}|."""
    return folded_measure(F, p) == level_sum(F, p)
