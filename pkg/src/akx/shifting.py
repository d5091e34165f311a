"""Shift operators, left compression and (s, s+1)-stabilization."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from . import kernels
from .family import PreconditionError, SetFamily, _coerce_mask, is_t_intersecting, mask_range, popcounts


def _check_point(F: SetFamily, i: int, name: str):
    if not 1 <= i <= F.n:
        raise PreconditionError(f"{name} in [n]", f"{name}={i} outside 1..{F.n}")


def _move(F: SetFamily, amask: int, bmask: int) -> SetFamily:
    # sets containing A and missing B go to (S \ A) | B unless that target is taken
    ind = F.indicator
    idx = mask_range(F.n)
    src = ind & ((idx & amask) == amask) & ((idx & bmask) == 0)
    targets = (idx[src] & ~amask) | bmask
    free = ~ind[targets]
    if not free.any():
        return F
    out = ind.copy()
    out[idx[src][free]] = False
    out[targets[free]] = True
    return SetFamily(F.n, out)


def shift_ij(F: SetFamily, i: int, j: int) -> SetFamily:
    """Replace i by j in every member where the result is not already present."""
    _check_point(F, i, "i")
    _check_point(F, j, "j")
    if i == j:
        raise PreconditionError("i != j", "shift needs two distinct points")
    return _move(F, 1 << (i - 1), 1 << (j - 1))


def shift_AB(F: SetFamily, A, B) -> SetFamily:
    """Replace A by B in members that contain A and miss B, when not blocked."""
    amask = _coerce_mask(F.n, A)
    bmask = _coerce_mask(F.n, B)
    if amask & bmask:
        raise PreconditionError("A, B disjoint", "shift sets overlap")
    return _move(F, amask, bmask)


def potential(F: SetFamily) -> int:
    """Sum of all elements over all members; strictly drops under an effective left shift."""
    idx = mask_range(F.n)
    members = idx[F.indicator]
    return int(sum(((members >> i) & 1).sum() * (i + 1) for i in range(F.n)))


def is_left_compressed(F: SetFamily) -> bool:
    return all(shift_ij(F, i, j) == F for j in range(1, F.n + 1) for i in range(j + 1, F.n + 1))


def left_compress(F: SetFamily) -> tuple[SetFamily, list[tuple[int, int]]]:
    """Apply shifts i -> j (j < i) until none changes the family.

    Pairs are tried with j outer and i inner, both ascending; the scan
    restarts after every effective shift.  Returns the fixpoint and the
    list of applied ``(i, j)``.
    """
    trace: list[tuple[int, int]] = []
    n = F.n
    changed = True
    while changed:
        changed = False
        for j in range(1, n + 1):
            for i in range(j + 1, n + 1):
                G = shift_ij(F, i, j)
                if G != F:
                    trace.append((i, j))
                    F = G
                    changed = True
                    break
            if changed:
                break
    return F, trace


def format_trace(trace) -> str:
    return "".join(f"{i} {j}\n" for i, j in trace)


def is_stable(F: SetFamily, s: int) -> bool:
    """Fixed by shift_AB for all disjoint A, B with |A| = s and |B| = s+1."""
    if s < 0:
        raise PreconditionError("s >= 0")
    points = range(1, F.n + 1)
    for A in combinations(points, s):
        amask = sum(1 << (a - 1) for a in A)
        rest = [x for x in points if not (amask >> (x - 1)) & 1]
        for B in combinations(rest, s + 1):
            if _move(F, amask, sum(1 << (b - 1) for b in B)) is not F:
                return False
    return True


def is_fully_stable(F: SetFamily) -> bool:
    return kernels.find_unstable(F.indicator, F.n) is None


def stabilize(F: SetFamily, t: int, trace: bool = False):
    """Heavy-shift F until it is (s, s+1)-stable for every s.

    Each step uses the smallest |A| that still moves something, which keeps
    the family t-intersecting.  With ``trace=True`` also returns the list
    of applied ``(A_mask, B_mask)``.
    """
    if not is_t_intersecting(F, t):
        raise PreconditionError("input t-intersecting", f"family is not {t}-intersecting")
    steps = []
    while True:
        pair = kernels.find_unstable(F.indicator, F.n)
        if pair is None:
            break
        amask, bmask = pair
        F = _move(F, amask, bmask)
        steps.append((amask, bmask))
    if not is_t_intersecting(F, t):
        raise RuntimeError("stabilization broke t-intersection")
    return (F, steps) if trace else F


def min_pair_size_sum(F: SetFamily) -> int | None:
    """min |A| + |B| over members (A = B allowed); None for the empty family."""
    sizes = popcounts(F.n)[F.indicator]
    if sizes.size == 0:
        return None
    return 2 * int(np.min(sizes))
