"""Closed-form extremal values for weighted t-intersecting families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .family import PreconditionError, as_rat, check_p

HALF = Fraction(1, 2)

REGIMES = (
    "frankl-unique",
    "frankl-two",
    "t1-psmall",
    "t1-plarge-odd",
    "t1-plarge-even",
    "t1-phalf-many",
    "phalf",
)


@dataclass(frozen=True)
class WResult:
    value: Fraction
    optimal_r: frozenset
    regime: str

    def r_text(self) -> str:
        return "{" + ",".join(str(r) for r in sorted(self.optimal_r)) + "}"


@dataclass(frozen=True, order=True)
class Breakpoint:
    t: int
    r: int

    @property
    def value(self) -> Fraction:
        return breakpoint(self.t, self.r)


def _check_tr(t: int, r: int):
    if t < 1:
        raise PreconditionError("t >= 1", f"t must be positive, got {t}")
    if r < 0:
        raise PreconditionError("r >= 0", f"r must be nonnegative, got {r}")


def breakpoint(t: int, r: int) -> Fraction:
    """p at which F_{t,r} and F_{t,r+1} weigh the same: (r+1)/(t+2r+1)."""
    _check_tr(t, r)
    return Fraction(r + 1, t + 2 * r + 1)


def window(t: int, r: int) -> tuple[Fraction, Fraction]:
    """Closed p-interval on which F_{t,r} is optimal among Frankl families."""
    _check_tr(t, r)
    low = Fraction(r, t + 2 * r - 1) if t + 2 * r > 1 else Fraction(0)
    return low, breakpoint(t, r)


def mu_frankl(t: int, r: int, p) -> Fraction:
    """Pr[Bin(t+2r, p) >= t+r], the measure of F_{t,r} on any ground set."""
    _check_tr(t, r)
    p = check_p(p)
    q = 1 - p
    size = t + 2 * r
    return sum((comb(size, k) * p**k * q ** (size - k) for k in range(t + r, size + 1)),
               Fraction(0))


def compare_frankl(t: int, r: int, p) -> int:
    """Sign of mu_frankl(t, r, p) - mu_frankl(t, r+1, p)."""
    diff = mu_frankl(t, r, p) - mu_frankl(t, r + 1, p)
    return (diff > 0) - (diff < 0)


def r_star(n: int, t: int) -> int:
    return (n - t) // 2


def w_closed(n: int, t: int, p) -> WResult:
    """w(n,t,p) with the set of optimal Frankl parameters and a regime tag."""
    if not (isinstance(n, int) and isinstance(t, int)) or t < 1 or n < t:
        raise PreconditionError("n >= t >= 1", f"invalid (n, t) = ({n}, {t})")
    p = check_p(p)
    rs = r_star(n, t)
    if t == 1:
        if p < HALF:
            return WResult(p, frozenset({0}), "t1-psmall")
        if p == HALF:
            return WResult(p, frozenset(range(rs + 1)), "t1-phalf-many")
        regime = "t1-plarge-odd" if n % 2 else "t1-plarge-even"
        return WResult(mu_frankl(1, rs, p), frozenset({rs}), regime)
    r = next((r for r in range(rs + 1) if p <= breakpoint(t, r)), rs)
    value = mu_frankl(t, r, p)
    if r < rs and p == breakpoint(t, r):
        return WResult(value, frozenset({r, r + 1}), "frankl-two")
    if p == HALF:
        return WResult(value, frozenset({r}), "phalf")
    return WResult(value, frozenset({r}), "frankl-unique")


def wsup_closed(t: int, p) -> Fraction:
    """sup over n of w(n,t,p)."""
    if t < 1:
        raise PreconditionError("t >= 1", f"t must be positive, got {t}")
    p = check_p(p)
    if p > HALF:
        return Fraction(1)
    if t == 1 or p == HALF:
        return p if t == 1 else HALF
    r = 0
    while p > breakpoint(t, r):
        r += 1
    return mu_frankl(t, r, p)


def curve_breakpoints(n: int, t: int) -> list[Fraction]:
    """Lower window ends r/(t+2r-1) for 1 <= r <= r*, where optima change."""
    return [Fraction(r, t + 2 * r - 1) for r in range(1, r_star(n, t) + 1)]


def parse_p(text: str) -> Fraction:
    return check_p(as_rat(text))


@dataclass(frozen=True)
class CurveRow:
    t: int
    p: Fraction
    w: WResult

    def fields(self) -> list:
        return [self.t, self.p.numerator, self.p.denominator, self.w.value.numerator,
                self.w.value.denominator, " ".join(str(r) for r in sorted(self.w.optimal_r)),
                f"{float(self.w.value):.12g}"]


CURVE_COLUMNS = ("t", "p_num", "p_den", "w_num", "w_den", "optimal_r", "w_float")


def curve_points(n: int, t: int, grid: int) -> list[Fraction]:
    """Grid points k/grid in (0,1) plus the breakpoints r/(t+2r-1), each once, ascending."""
    if grid < 2:
        raise PreconditionError("grid >= 2", f"grid {grid} too coarse")
    pts = {Fraction(k, grid) for k in range(1, grid)}
    pts.update(curve_breakpoints(n, t))
    return sorted(pts)


def curve_rows(n: int, tmax: int, grid: int = 200) -> list[CurveRow]:
    if not 1 <= tmax <= n:
        raise PreconditionError("1 <= tmax <= n", f"tmax={tmax} with n={n}")
    return [CurveRow(t, p, w_closed(n, t, p)) for t in range(1, tmax + 1)
            for p in curve_points(n, t, grid)]
