"""Set families on [n] stored as indicator vectors over subset bitmasks.

Point ``i`` (1-based) is bit ``i-1`` of a mask.  All measures are exact
``Fraction`` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable

import numpy as np

from . import kernels

Rat = Fraction
MAX_N = 24


class PreconditionError(ValueError):
    """Raised when an operation's input violates a stated precondition.

    ``condition`` names the violated requirement so callers and tests can
    tell the failures apart.
    """

    def __init__(self, condition: str, message: str | None = None):
        super().__init__(message or condition)
        self.condition = condition


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def as_rat(value) -> Fraction:
    """Coerce ints, Fractions and ``"NUM/DEN"`` strings; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"decimal input {value!r} refused; use NUM/DEN")
        return Fraction(text)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def check_p(p) -> Fraction:
    p = as_rat(p)
    if not 0 < p < 1:
        raise PreconditionError("0 < p < 1", f"p must lie strictly between 0 and 1, got {p}")
    return p


def _check_n(n: int) -> int:
    if not isinstance(n, (int, np.integer)) or n < 0 or n > MAX_N:
        raise PreconditionError("0 <= n <= 24", f"ground size {n} outside 0..{MAX_N}")
    return int(n)


@lru_cache(maxsize=None)
def popcounts(n: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.uint32)
    if hasattr(np, "bitwise_count"):
        out = np.bitwise_count(idx).astype(np.int8)
    else:
        out = np.zeros(1 << n, dtype=np.int8)
        for i in range(n):
            out += ((idx >> i) & 1).astype(np.int8)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def mask_range(n: int) -> np.ndarray:
    out = np.arange(1 << n, dtype=np.int64)
    out.setflags(write=False)
    return out


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << (int(e) - 1)
    return mask


@dataclass(frozen=True, order=True)
class Subset:
    n: int
    mask: int

    def __post_init__(self):
        _check_n(self.n)
        if self.mask < 0 or self.mask >> self.n:
            raise PreconditionError("no bit above n", f"mask {self.mask:#x} exceeds ground size {self.n}")

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> "Subset":
        elements = list(elements)
        for e in elements:
            if not 1 <= e <= n:
                raise PreconditionError("elements within [n]", f"element {e} outside [1, {n}]")
        return cls(n, mask_of(elements))

    @property
    def elements(self) -> tuple[int, ...]:
        return elements_of(self.mask)

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, i):
        return 1 <= i <= self.n and bool((self.mask >> (i - 1)) & 1)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"


def _coerce_mask(n: int, s) -> int:
    if isinstance(s, Subset):
        if s.n != n:
            raise PreconditionError("matching ground size", f"subset on {s.n} points used with n={n}")
        return s.mask
    if isinstance(s, (int, np.integer)):
        s = int(s)
        if s < 0 or s >> n:
            raise PreconditionError("no bit above n", f"mask {s} exceeds ground size {n}")
        return s
    return Subset.of(n, s).mask


class SetFamily:
    """Immutable family of subsets of [n] backed by a bool vector of length 2^n."""

    __slots__ = ("n", "_ind", "_hash")

    def __init__(self, n: int, indicator):
        n = _check_n(n)
        ind = np.array(indicator, dtype=bool).reshape(-1)
        if ind.shape[0] != 1 << n:
            raise PreconditionError("indicator length 2^n",
                                    f"indicator has length {ind.shape[0]}, expected {1 << n}")
        ind.setflags(write=False)
        self.n = n
        self._ind = ind
        self._hash = None

    @classmethod
    def from_sets(cls, n: int, sets: Iterable) -> "SetFamily":
        n = _check_n(n)
        ind = np.zeros(1 << n, dtype=bool)
        for s in sets:
            ind[_coerce_mask(n, s)] = True
        return cls(n, ind)

    @classmethod
    def from_masks(cls, n: int, masks) -> "SetFamily":
        n = _check_n(n)
        ind = np.zeros(1 << n, dtype=bool)
        masks = np.asarray(masks, dtype=np.int64)
        if masks.size and (masks.min() < 0 or masks.max() >= 1 << n):
            raise PreconditionError("no bit above n", "mask outside ground set")
        ind[masks] = True
        return cls(n, ind)

    @classmethod
    def empty(cls, n: int) -> "SetFamily":
        return cls(n, np.zeros(1 << _check_n(n), dtype=bool))

    @classmethod
    def full(cls, n: int) -> "SetFamily":
        return cls(n, np.ones(1 << _check_n(n), dtype=bool))

    @property
    def indicator(self) -> np.ndarray:
        return self._ind

    @property
    def indicator_int(self) -> int:
        """The indicator read as an integer, bit ``mask`` set for each member."""
        return int.from_bytes(np.packbits(self._ind, bitorder="little").tobytes(), "little")

    def masks(self) -> np.ndarray:
        return np.flatnonzero(self._ind)

    def sets(self) -> list[tuple[int, ...]]:
        return [elements_of(int(m)) for m in self.masks()]

    def __iter__(self):
        return (int(m) for m in self.masks())

    def __len__(self):
        return int(self._ind.sum())

    def __bool__(self):
        return bool(self._ind.any())

    def __contains__(self, s):
        try:
            return bool(self._ind[_coerce_mask(self.n, s)])
        except PreconditionError:
            return False

    def __eq__(self, other):
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._ind, other._ind)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, np.packbits(self._ind).tobytes()))
        return self._hash

    def __repr__(self):
        body = ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.sets()[:8])
        more = "" if len(self) <= 8 else f", ... ({len(self)} sets)"
        return f"SetFamily(n={self.n}, [{body}{more}])"

    def _same_ground(self, other: "SetFamily"):
        if other.n != self.n:
            raise PreconditionError("matching ground size", f"families on {self.n} and {other.n} points")

    def __or__(self, other):
        self._same_ground(other)
        return SetFamily(self.n, self._ind | other._ind)

    def __and__(self, other):
        self._same_ground(other)
        return SetFamily(self.n, self._ind & other._ind)

    def __sub__(self, other):
        self._same_ground(other)
        return SetFamily(self.n, self._ind & ~other._ind)

    def complement(self) -> "SetFamily":
        return SetFamily(self.n, ~self._ind)

    def level(self, k: int) -> "SetFamily":
        return SetFamily(self.n, self._ind & (popcounts(self.n) == k))

    def level_counts(self) -> list[int]:
        counts = np.bincount(popcounts(self.n)[self._ind], minlength=self.n + 1)
        return [int(c) for c in counts]

    def extend(self, extra: int = 1) -> "SetFamily":
        """The same family on n+extra points, new points free (``F × 2^extra``)."""
        return SetFamily(self.n + extra, np.tile(self._ind, 1 << extra))

    def embed(self, n_new: int) -> "SetFamily":
        """The same member sets viewed inside a larger ground set."""
        if n_new < self.n:
            raise PreconditionError("n_new >= n")
        ind = np.zeros(1 << _check_n(n_new), dtype=bool)
        ind[: 1 << self.n] = self._ind
        return SetFamily(n_new, ind)

    def restrict(self, n_new: int) -> "SetFamily":
        """Members avoiding every point above ``n_new``."""
        if n_new > self.n:
            raise PreconditionError("n_new <= n")
        return SetFamily(n_new, self._ind[: 1 << n_new])

    def permute(self, perm) -> "SetFamily":
        """Relabel point ``i`` as ``perm[i-1]`` (a permutation of 1..n)."""
        perm = [int(x) for x in perm]
        if sorted(perm) != list(range(1, self.n + 1)):
            raise PreconditionError("permutation of [n]", f"{perm} is not a permutation of 1..{self.n}")
        idx = mask_range(self.n)
        image = np.zeros_like(idx)
        for i, target in enumerate(perm):
            image |= ((idx >> i) & 1) << (target - 1)
        ind = np.zeros(1 << self.n, dtype=bool)
        ind[image[self._ind]] = True
        return SetFamily(self.n, ind)


def measure(F: SetFamily, p) -> Fraction:
    """Exact μ_p mass: sum over members of p^|A| (1-p)^(n-|A|)."""
    p = check_p(p)
    q = 1 - p
    return sum((c * p**k * q ** (F.n - k) for k, c in enumerate(F.level_counts()) if c),
               Fraction(0))


def minimal_members(F: SetFamily) -> SetFamily:
    """Inclusion-minimal members (the generating sets when F is monotone)."""
    up = up_set(F).indicator
    idx = mask_range(F.n)
    has_smaller = np.zeros(1 << F.n, dtype=bool)
    for i in range(F.n):
        bit = 1 << i
        with_bit = (idx & bit) != 0
        has_smaller |= with_bit & up[idx ^ bit]
    return SetFamily(F.n, F.indicator & ~has_smaller)


def is_t_intersecting(F: SetFamily, t: int, G: SetFamily | None = None) -> bool:
    """Every pair (A = B included) shares at least t points; cross version if G given.

    Only minimal members need checking: supersets can only meet more.
    """
    if t < 1:
        raise PreconditionError("t >= 1", f"t must be positive, got {t}")
    a = minimal_members(F).masks().astype(np.uint64)
    if G is None:
        b = a
    else:
        F._same_ground(G)
        b = minimal_members(G).masks().astype(np.uint64)
    return bool(kernels.all_pairs_meet(a, b, t))


def up_set(F: SetFamily) -> SetFamily:
    """Smallest monotone family containing F."""
    ind = F.indicator.copy()
    for i in range(F.n):
        v = ind.reshape(-1, 2, 1 << i)
        v[:, 1, :] |= v[:, 0, :]
    return SetFamily(F.n, ind)


def is_monotone(F: SetFamily) -> bool:
    return up_set(F) == F


def threshold_family(n: int, window_mask: int, k: int) -> SetFamily:
    return SetFamily(n, popcounts(n)[mask_range(n) & window_mask] >= k)


def frankl(n: int, t: int, r: int) -> SetFamily:
    """Sets meeting the window [t+2r] in at least t+r points."""
    if t < 1 or r < 0:
        raise PreconditionError("t >= 1 and r >= 0")
    if t + 2 * r > n:
        raise PreconditionError("t + 2r <= n", f"window t+2r={t + 2 * r} exceeds n={n}")
    return threshold_family(_check_n(n), (1 << (t + 2 * r)) - 1, t + r)


def frankl_equivalence_witness(F: SetFamily, t: int, r: int) -> Subset | None:
    """A window S with F = {A : |A ∩ S| >= t+r}, smallest in lexicographic order."""
    size = t + 2 * r
    if t < 1 or r < 0 or size > F.n:
        return None
    if len(F) != len(frankl(F.n, t, r)):
        return None
    for window in combinations(range(1, F.n + 1), size):
        mask = mask_of(window)
        if threshold_family(F.n, mask, t + r) == F:
            return Subset(F.n, mask)
    return None


def canonical_form(F: SetFamily) -> SetFamily:
    """Representative of F's orbit under point permutations (minimal indicator_int)."""
    best = None
    for perm in permutations(range(1, F.n + 1)):
        G = F.permute(perm)
        key = G.indicator_int
        if best is None or key < best[0]:
            best = (key, G)
    return best[1]


def equivalence_classes(families: Iterable[SetFamily]) -> dict[SetFamily, list[SetFamily]]:
    classes: dict[SetFamily, list[SetFamily]] = {}
    for F in families:
        classes.setdefault(canonical_form(F), []).append(F)
    return classes


# --- SETFAM 1 text format -------------------------------------------------

SETFAM_HEADER = "SETFAM 1"


def dumps_setfam(F: SetFamily) -> str:
    lines = [SETFAM_HEADER, f"n={F.n}"]
    for s in F.sets():
        lines.append(",".join(map(str, s)) if s else "{}")
    return "\n".join(lines) + "\n"


def loads_setfam(text: str) -> SetFamily:
    lines = text.splitlines()
    if not lines or lines[0].strip() != SETFAM_HEADER:
        raise ParseError(1, f"expected header {SETFAM_HEADER!r}")
    if len(lines) < 2 or not lines[1].strip().startswith("n="):
        raise ParseError(2, "expected 'n=<int>'")
    try:
        n = int(lines[1].strip()[2:])
    except ValueError:
        raise ParseError(2, f"bad ground size {lines[1].strip()[2:]!r}") from None
    if not 0 <= n <= MAX_N:
        raise ParseError(2, f"ground size {n} outside 0..{MAX_N}")
    ind = np.zeros(1 << n, dtype=bool)
    for lineno, raw in enumerate(lines[2:], start=3):
        line = raw.strip()
        if not line:
            continue
        if line == "{}":
            elems = []
        else:
            try:
                elems = [int(tok) for tok in line.split(",")]
            except ValueError:
                raise ParseError(lineno, f"non-integer element in {line!r}") from None
        for e in elems:
            if not 1 <= e <= n:
                raise ParseError(lineno, f"element {e} outside 1..{n}")
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise ParseError(lineno, "elements must be strictly ascending")
        mask = mask_of(elems)
        if ind[mask]:
            raise ParseError(lineno, f"duplicate set {line!r}")
        ind[mask] = True
    return SetFamily(n, ind)


def read_setfam(path) -> SetFamily:
    with open(path, encoding="utf-8") as fh:
        return loads_setfam(fh.read())


def write_setfam(F: SetFamily, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_setfam(F))
