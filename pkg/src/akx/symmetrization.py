"""Symmetric extent, its boundary, and the pushing/pulling surgeries."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .family import (
    PreconditionError,
    SetFamily,
    check_p,
    is_monotone,
    is_t_intersecting,
    mask_range,
    measure,
    popcounts,
    up_set,
)
from .generating import generating_data, gs2_transform, intersection_number, is_trivial
from .shifting import is_left_compressed, left_compress, shift_ij


class NoAdmissibleIndex(PreconditionError):
    """No coordinate s with s > m and s != ℓ+1 exists inside the ground set."""

    def __init__(self, message: str):
        super().__init__("admissible s", message)


@dataclass(frozen=True)
class SymmetryData:
    """ℓ, the boundary X and its slices.

    ``slices[a]`` is X_a as a family on the n-ℓ-1 points above ℓ+1
    (bit k stands for point ℓ+2+k).
    """

    n: int
    sym_extent: int
    boundary: SetFamily
    slices: dict = field(default_factory=dict)

    def slice(self, a: int) -> SetFamily:
        width = max(self.n - self.sym_extent - 1, 0)
        return self.slices.get(a, SetFamily.empty(width))

    def slice_mass(self, a: int, p) -> Fraction:
        """m_a, the μ_p mass of C([ℓ], a) × X_a inside the n-point family."""
        return measure(block(self.n, self.sym_extent, a, self.slice(a), with_next=False), p)


def _split(n: int, ell: int):
    idx = mask_range(n)
    low = idx & ((1 << ell) - 1)
    nxt = (idx >> ell) & 1
    high = idx >> (ell + 1)
    return popcounts(n)[low], nxt.astype(bool), high


def block(n: int, ell: int, k: int, tail: SetFamily, with_next: bool | None) -> SetFamily:
    """C([ℓ], k) × {ℓ+1 present / absent / either} × tail, on n points.

    ``with_next`` None means ℓ+1 is unconstrained and the window becomes
    [ℓ+1], i.e. C([ℓ+1], k) × tail.
    """
    if ell >= n:
        return SetFamily.empty(n)
    low_size, nxt, high = _split(n, ell)
    in_tail = tail.indicator[high]
    if with_next is None:
        sel = (low_size + nxt == k) & in_tail
    else:
        sel = (low_size == k) & (nxt == with_next) & in_tail
    return SetFamily(n, sel)


def symmetric_extent(F: SetFamily) -> int:
    ell = min(F.n, 1)
    while ell < F.n:
        nxt = ell + 1
        if all(shift_ij(F, i, nxt) == F and shift_ij(F, nxt, i) == F for i in range(1, nxt)):
            ell = nxt
        else:
            break
    return ell


def symmetry_data(F: SetFamily) -> SymmetryData:
    if not is_left_compressed(F):
        raise PreconditionError("left-compressed", "family is not left-compressed")
    n = F.n
    ell = symmetric_extent(F)
    if ell >= n:
        return SymmetryData(n, ell, SetFamily.empty(n), {})
    idx = mask_range(n)
    ind = F.indicator
    nbit = 1 << ell
    # by symmetry inside [ℓ] one witness i is as good as any: take the lowest
    low = idx & (nbit - 1)
    lowest = low & -low
    cand = ind & ((idx & nbit) == 0) & (low != 0)
    blocked = np.zeros_like(ind)
    blocked[cand] = ~ind[(idx[cand] ^ lowest[cand]) | nbit]
    X = SetFamily(n, blocked)
    low_size, _, high = _split(n, ell)
    width = n - ell - 1
    slices = {}
    for a in sorted(set(int(x) for x in low_size[blocked])):
        tail = np.zeros(1 << width, dtype=bool)
        tail[high[blocked & (low_size == a)]] = True
        slices[a] = SetFamily(width, tail)
    return SymmetryData(n, ell, X, slices)


def _check_sym_common(F: SetFamily, t: int) -> SymmetryData:
    sd = symmetry_data(F)
    if t < 1 or not is_t_intersecting(F, t):
        raise PreconditionError("t-intersecting", f"family is not {t}-intersecting")
    if sd.sym_extent >= F.n:
        raise PreconditionError("ℓ < n", "family is symmetric on all points")
    return sd


def _push(F: SetFamily, sd: SymmetryData, a: int, b: int) -> SetFamily:
    # remove C([ℓ],b) × X_b, add C([ℓ],a-1) × {ℓ+1} × X_a
    n, ell = F.n, sd.sym_extent
    out = F
    if 0 <= b <= ell:
        out = out - block(n, ell, b, sd.slice(b), with_next=False)
    if a >= 1:
        out = out | block(n, ell, a - 1, sd.slice(a), with_next=True)
    return out


def sym2_transform(F: SetFamily, a: int, b: int, t: int | None = None):
    """Push X_a up through ℓ+1 while dropping X_b (F1), and the mirror move (F2)."""
    sd = symmetry_data(F)
    ell = sd.sym_extent
    if t is None:
        t = a + b - ell
    sd = _check_sym_common(F, t)
    if a == b:
        raise PreconditionError("a != b", "sizes must differ")
    if a + b != ell + t:
        raise PreconditionError("a + b = ℓ + t", f"{a} + {b} != {ell} + {t}")
    if not (0 <= a <= ell and 0 <= b <= ell):
        raise PreconditionError("0 <= a, b <= ℓ", f"slice sizes {a}, {b} outside 0..{ell}")
    if not sd.slice(a) and not sd.slice(b):
        raise PreconditionError("slices not both empty", f"X_{a} and X_{b} are empty")
    return _push(F, sd, a, b), _push(F, sd, b, a)


def sym2_identity_sides(F: SetFamily, a: int, b: int, p, t: int | None = None):
    """Both sides of the weighted averaging identity for sym2 outputs."""
    p = check_p(p)
    sd = symmetry_data(F)
    ell = sd.sym_extent
    if t is None:
        t = a + b - ell
    F1, F2 = sym2_transform(F, a, b, t)
    denom = ell - t + 2
    lhs = ((ell - a + 1) * measure(F1, p) + (ell - b + 1) * measure(F2, p)) / denom
    rhs = measure(F, p) + Fraction(t - 1, denom) * (sd.slice_mass(a, p) + sd.slice_mass(b, p))
    return lhs, rhs


def admissible_indices(F: SetFamily, ell: int | None = None) -> list[int]:
    m = generating_data(F).extent
    if ell is None:
        ell = symmetric_extent(F)
    return [s for s in range(m + 1, F.n + 1) if s != ell + 1]


def sym3_transform(F: SetFamily, t: int | None = None, s_idx: int | None = None) -> SetFamily:
    """Replace C([ℓ],a) × X_a by C([ℓ+1],a) × X'_a, where X'_a keeps sets containing s.

    a = (ℓ + t)/2; s defaults to the smallest admissible index.
    """
    if is_trivial(F):
        raise PreconditionError("non-trivial", "family is empty or everything")
    if not is_monotone(F):
        raise PreconditionError("monotone", "family is not an up-set")
    if t is None:
        t = intersection_number(F)
    sd = _check_sym_common(F, t)
    ell = sd.sym_extent
    m = generating_data(F).extent
    allowed = admissible_indices(F, ell)
    if s_idx is None:
        if not allowed:
            raise NoAdmissibleIndex(f"no s in ({m}, {F.n}] other than ℓ+1={ell + 1}")
        s_idx = allowed[0]
    elif s_idx not in allowed:
        raise NoAdmissibleIndex(f"s={s_idx} must exceed m={m}, differ from {ell + 1} and lie in [n]")
    if (ell + t) % 2:
        raise PreconditionError("(ℓ + t)/2 integer", f"ℓ + t = {ell + t} is odd")
    a = (ell + t) // 2
    Xa = sd.slice(a)
    if not Xa:
        raise PreconditionError("X_a non-empty", f"slice X_{a} is empty")
    shift = s_idx - ell - 2
    keep = ((mask_range(Xa.n) >> shift) & 1).astype(bool)
    Xa_s = SetFamily(Xa.n, Xa.indicator & keep)
    n = F.n
    return (F - block(n, ell, a, Xa, with_next=False)) | block(n, ell, a, Xa_s, with_next=None)


def sym3_predicted(F: SetFamily, p, t: int) -> Fraction:
    p = check_p(p)
    sd = symmetry_data(F)
    ell = sd.sym_extent
    a = (ell + t) // 2
    return measure(F, p) + (a - (1 - p) * (ell + 1)) / (ell + 1 - a) * sd.slice_mass(a, p)


def sym3_threshold(ell: int, t: int) -> Fraction:
    """sym3 strictly gains exactly when p exceeds (ℓ-t+2)/(2(ℓ+1))."""
    return Fraction(ell - t + 2, 2 * (ell + 1))


def _normalize(F: SetFamily) -> SetFamily:
    G = up_set(F)
    if not is_left_compressed(G):
        G = up_set(left_compress(G)[0])
    return G


def _collapse_extent(G: SetFamily, t: int, p: Fraction, limit: int) -> SetFamily:
    """Apply gs2 (keeping the heavier output) until the extent is at most ``limit``."""
    for _ in range(4 * (1 << G.n)):
        gd = generating_data(G)
        m = gd.extent
        if m <= limit:
            return G
        a = min(gd.by_size)
        b = m + t - a
        if a == b:
            raise RuntimeError("collapse hit a balanced boundary")
        F1, F2 = gs2_transform(G, a, b, t)
        G = _normalize(F1 if measure(F1, p) >= measure(F2, p) else F2)
    raise RuntimeError("extent collapse did not terminate")


def sym3plus_improve(F: SetFamily, p, t: int | None = None) -> SetFamily | None:
    """A strictly heavier t-intersecting family on the same n points, or None.

    Preconditions: non-trivial monotone left-compressed t-intersecting,
    ℓ < m or m < n, n + t even and (ℓ-t+2)/(2(ℓ+1)) < p <= 1/2.
    """
    p = check_p(p)
    n = F.n
    if is_trivial(F) or not is_monotone(F) or not is_left_compressed(F):
        return None
    if t is None:
        t = intersection_number(F)
    if t < 1 or not is_t_intersecting(F, t) or (n + t) % 2:
        return None
    sd = symmetry_data(F)
    ell = sd.sym_extent
    m = generating_data(F).extent
    if not (ell < m or m < n):
        return None
    if not (sym3_threshold(ell, t) < p <= Fraction(1, 2)):
        return None
    base = measure(F, p)

    def accept(G):
        return G if G.n == n and measure(G, p) > base and is_t_intersecting(G, t) else None

    for a in sorted(sd.slices):
        b = ell + t - a
        if a == b:
            continue
        candidates = [_push(F, sd, a, b)]
        if 0 <= b <= ell:
            candidates.append(_push(F, sd, b, a))
        best = max(candidates, key=lambda G: measure(G, p))
        if accept(best):
            return best

    if admissible_indices(F, ell):
        return accept(sym3_transform(F, t))
    if m == n:
        wide = F.extend(1)
        G = _normalize(sym3_transform(wide, t, s_idx=n + 1))
        H = _collapse_extent(G, t, p, n).restrict(n)
        return accept(H)
    # ℓ = m = n-1: m + t is odd, so gs2 applies directly
    return accept(_collapse_extent(F, t, p, m - 1) if m > 1 else F)
