"""Subsets of the cycle Z_m: s-agreement tests, intervals and the cross-agreeing size bound."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .family import PreconditionError

MAX_M = 14


@dataclass(frozen=True, order=True)
class ZmSet:
    m: int
    mask: int

    def __post_init__(self):
        if self.m < 1:
            raise PreconditionError("m >= 1", f"modulus {self.m} must be positive")
        if self.mask < 0 or self.mask >> self.m:
            raise PreconditionError("no bit above m-1", f"mask {self.mask:#x} has residues >= {self.m}")

    @classmethod
    def of(cls, m: int, residues) -> "ZmSet":
        mask = 0
        for x in residues:
            mask |= 1 << (int(x) % m)
        return cls(m, mask)

    @property
    def residues(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.m) if (self.mask >> x) & 1)

    def __len__(self):
        return self.mask.bit_count()

    def __repr__(self):
        return "{" + ",".join(map(str, self.residues)) + f"}} mod {self.m}"


def _check_s(m: int, s: int):
    if s < 1 or 2 * s > m:
        raise PreconditionError("1 <= s <= m/2", f"s={s} not in 1..{m // 2}")


def _rotate(mask: int, k: int, m: int) -> int:
    k %= m
    full = (1 << m) - 1
    return ((mask << k) | (mask >> (m - k))) & full


def agree_window(m: int, s: int, a: int) -> int:
    """Residues b with a - b in {-(s-1), ..., s-1} (mod m), as a mask."""
    base = 0
    for d in range(-(s - 1), s):
        base |= 1 << (d % m)
    return _rotate(base, a, m)


def neighbourhood(A: ZmSet, s: int) -> int:
    """Mask of all b that s-agree with every element of A."""
    out = (1 << A.m) - 1
    for a in A.residues:
        out &= agree_window(A.m, s, a)
    return out


def is_cross_s_agreeing(A: ZmSet, B: ZmSet, s: int) -> bool:
    if A.m != B.m:
        raise PreconditionError("same modulus", f"moduli {A.m} and {B.m} differ")
    _check_s(A.m, s)
    return (B.mask & ~neighbourhood(A, s)) == 0


def is_s_agreeing(A: ZmSet, s: int) -> bool:
    return is_cross_s_agreeing(A, A, s)


def is_interval(A: ZmSet) -> Fraction | None:
    """Center of A when A is a proper non-empty cyclic arc, else None.

    Odd arcs {x-l..x+l} have center x; even arcs {x-l..x+l-1} have center
    x - 1/2.  Centers are reported in [0, m).
    """
    m, size = A.m, len(A)
    if size == 0 or size >= m:
        return None
    starts = [x for x in A.residues if not (A.mask >> ((x - 1) % m)) & 1]
    if len(starts) != 1:
        return None
    a0 = starts[0]
    half = size // 2
    center = Fraction(a0 + half) if size % 2 else Fraction(2 * (a0 + half) - 1, 2)
    return center % m


@dataclass
class CrossAgreeingReport:
    m: int
    s: int
    ok: bool = True
    max_sum: int = 0
    max_self: int = 0
    equality_pairs: list = field(default_factory=list)  # (A mask, B mask, center or None)
    failures: list = field(default_factory=list)

    def lines(self) -> list[str]:
        out = []
        for a, b, center in self.equality_pairs:
            c = "-" if center is None else str(center)
            out.append(f"{a.bit_count()} {b.bit_count()} {a:#x} {b:#x} {c}")
        return out


def verify_katona_cross(m: int, s: int) -> CrossAgreeingReport:
    """Exhaustive check of |A| + |B| <= 2s and of the equality cases.

    B is cross-agreeing with A exactly when B lies inside the common
    neighbourhood N(A), so the pair (A, N(A)) is the only candidate for
    equality with a given A.
    """
    if m > MAX_M:
        raise PreconditionError(f"m <= {MAX_M}", f"modulus {m} above cap")
    _check_s(m, s)
    report = CrossAgreeingReport(m, s)
    balanced = 2 * s == m
    for amask in range(0 if balanced else 1, 1 << m):
        A = ZmSet(m, amask)
        nb = neighbourhood(A, s)
        if (amask & ~nb) == 0:
            report.max_self = max(report.max_self, len(A))
            if not balanced and len(A) == s and is_interval(A) is None:
                report.ok = False
                report.failures.append((amask, amask, "self-agreeing maximum is not an interval"))
        if not nb and not balanced:
            continue
        total = amask.bit_count() + nb.bit_count()
        report.max_sum = max(report.max_sum, total)
        if total > 2 * s:
            report.ok = False
            report.failures.append((amask, nb, f"|A|+|B| = {total} > {2 * s}"))
        if balanced:
            # every B avoiding A + s works, so N(A) is the shifted complement
            expected = 0
            for x in range(m):
                if not (amask >> ((x + s) % m)) & 1:
                    expected |= 1 << x
            if nb != expected or total != m:
                report.ok = False
                report.failures.append((amask, nb, "not the shifted complement"))
                continue
            report.equality_pairs.append((amask, nb, None))
        elif total == 2 * s:
            ca, cb = is_interval(A), is_interval(ZmSet(m, nb))
            if ca is None or cb is None or ca != cb:
                report.ok = False
                report.failures.append((amask, nb, "equality pair is not co-centered intervals"))
            report.equality_pairs.append((amask, nb, ca))
    return report
