"""Generating sets (minterms) of monotone families and the extent-reducing surgeries."""

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
    minimal_members,
    popcounts,
    up_set,
)
from .shifting import is_left_compressed


@dataclass(frozen=True)
class GeneratingData:
    generators: SetFamily
    extent: int
    boundary: SetFamily
    by_size: dict = field(default_factory=dict)

    def boundary_of_size(self, a: int) -> SetFamily:
        return self.by_size.get(a, SetFamily.empty(self.generators.n))


def is_trivial(F: SetFamily) -> bool:
    return not F or len(F) == 1 << F.n


def generating_data(F: SetFamily) -> GeneratingData:
    """Minimal members, extent m, boundary generators (those containing m) split by size."""
    if is_trivial(F):
        raise PreconditionError("non-trivial", "family is empty or everything")
    if not is_monotone(F):
        raise PreconditionError("monotone", "family is not an up-set")
    gens = minimal_members(F)
    masks = gens.masks()
    union = int(np.bitwise_or.reduce(masks)) if masks.size else 0
    m = union.bit_length()
    bit = 1 << (m - 1)
    boundary_ind = gens.indicator & ((mask_range(F.n) & bit) != 0)
    boundary = SetFamily(F.n, boundary_ind)
    sizes = popcounts(F.n)
    by_size = {}
    for a in sorted(set(int(x) for x in sizes[boundary_ind])):
        by_size[a] = SetFamily(F.n, boundary_ind & (sizes == a))
    return GeneratingData(gens, m, boundary, by_size)


def extent(F: SetFamily) -> int:
    return generating_data(F).extent


def intersection_number(F: SetFamily) -> int:
    """Largest t for which F is t-intersecting (min |A ∩ B| over members)."""
    masks = minimal_members(F).masks()
    if masks.size == 0:
        raise PreconditionError("non-empty", "empty family meets every bound")
    best = None
    for x in masks:
        inter = popcounts(F.n)[masks & x].min()
        best = inter if best is None else min(best, inter)
    return int(best)


def drop_point(G: SetFamily, m: int) -> SetFamily:
    """{S \\ {m} : S in G}."""
    bit = 1 << (m - 1)
    return SetFamily.from_masks(G.n, G.masks() & ~bit)


def cylinder_measure(G: SetFamily, m: int, p) -> Fraction:
    """μ_p of the sets of G, each read as a set on [m] (its cylinder mass on n points).

    Boundary generators live inside [m]; measuring them there is what makes
    the surgery identities exact when points above the extent exist.
    """
    return measure(G.restrict(m), p)


def _check_common(F: SetFamily, t: int) -> GeneratingData:
    gd = generating_data(F)
    if not is_left_compressed(F):
        raise PreconditionError("left-compressed", "family is not left-compressed")
    if t < 1 or not is_t_intersecting(F, t):
        raise PreconditionError("t-intersecting", f"family is not {t}-intersecting")
    return gd


def gs2_transform(F: SetFamily, a: int, b: int, t: int | None = None):
    """Remove the extent from boundary generators of size b (F1) or a (F2).

    F1 drops the size-a boundary generators and shortens the size-b ones;
    F2 is the mirror image.  ``t`` defaults to a + b - m.
    """
    gd = generating_data(F)
    m = gd.extent
    if t is None:
        t = a + b - m
    gd = _check_common(F, t)
    if a == b:
        raise PreconditionError("a != b", "sizes must differ")
    if a + b != m + t:
        raise PreconditionError("a + b = m + t", f"{a} + {b} != {m} + {t}")
    Ga, Gb = gd.boundary_of_size(a), gd.boundary_of_size(b)
    if not Ga and not Gb:
        raise PreconditionError("boundary sizes not both empty", f"no boundary generators of size {a} or {b}")
    rest = gd.generators - Ga - Gb
    F1 = up_set(rest | drop_point(Gb, m))
    F2 = up_set(rest | drop_point(Ga, m))
    return F1, F2


def gs2_predicted(F: SetFamily, a: int, b: int, p) -> tuple[Fraction, Fraction]:
    """Measures of the two gs2 outputs computed from the boundary masses alone."""
    p = check_p(p)
    gd = generating_data(F)
    base = measure(F, p)
    ma = cylinder_measure(gd.boundary_of_size(a), gd.extent, p)
    mb = cylinder_measure(gd.boundary_of_size(b), gd.extent, p)
    ratio = (1 - p) / p
    return base - ma + ratio * mb, base - mb + ratio * ma


def gs3_transform(F: SetFamily, i: int, t: int | None = None) -> SetFamily:
    """Shorten the size-a boundary generators that avoid i, drop those containing i.

    Here a = (m + t)/2.  ``t`` defaults to the family's intersection number.
    """
    if t is None:
        t = intersection_number(F) if F else 1
    gd = _check_common(F, t)
    m = gd.extent
    if m <= 1:
        raise PreconditionError("m > 1", f"extent {m} too small")
    if (m + t) % 2:
        raise PreconditionError("(m + t)/2 integer", f"m + t = {m + t} is odd")
    a = (m + t) // 2
    Ga = gd.boundary_of_size(a)
    if not Ga:
        raise PreconditionError("boundary size a non-empty", f"no boundary generators of size {a}")
    if not 1 <= i <= m - 1:
        raise PreconditionError("i in [m-1]", f"i={i} outside 1..{m - 1}")
    with_i = SetFamily(F.n, Ga.indicator & ((mask_range(F.n) >> (i - 1)) & 1).astype(bool))
    return up_set((gd.generators - Ga) | drop_point(Ga - with_i, m))


def gs3_predicted(F: SetFamily, i: int, p, t: int) -> Fraction:
    p = check_p(p)
    gd = generating_data(F)
    a = (gd.extent + t) // 2
    Ga = gd.boundary_of_size(a)
    with_i = SetFamily(F.n, Ga.indicator & ((mask_range(F.n) >> (i - 1)) & 1).astype(bool))
    m = gd.extent
    return measure(F, p) + (1 - p) / p * cylinder_measure(Ga, m, p) - cylinder_measure(with_i, m, p) / p


def gs3_average_gain(F: SetFamily, p, t: int) -> Fraction:
    """Mean over i in [m-1] of μ(F_i) - μ(F), via the closed coefficient."""
    p = check_p(p)
    gd = generating_data(F)
    m = gd.extent
    a = (m + t) // 2
    coeff = (1 - p) / p - Fraction(a - 1) / (p * (m - 1))
    return coeff * cylinder_measure(gd.boundary_of_size(a), m, p)
