"""Families on Z_m^n × {0,1}^l, the σ_y correspondence, coordinate reduction
and half-integral stable set maximization.

Points are indexed in mixed radix with coordinate order
(x_1, ..., x_n, b_1, ..., b_l) and x_1 most significant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import lcm

import networkx as nx
import numpy as np

from . import kernels
from .family import ParseError, PreconditionError, SetFamily
from .oracle import max_weight_clique

ORACLE_CAP = 100
EXHAUSTIVE_CAP = 20


def _check_s(m: int, s: int):
    if m < 1 or s < 1 or 2 * s > m:
        raise PreconditionError("1 <= s <= m/2", f"s={s} not allowed for m={m}")


@lru_cache(maxsize=64)
def coordinates(m: int, n: int, l: int) -> np.ndarray:
    """Row k holds the coordinate tuple of point index k."""
    dims = (m,) * n + (2,) * l
    size = m**n * 2**l
    out = np.zeros((size, n + l), dtype=np.int64)
    idx = np.arange(size, dtype=np.int64)
    for c in range(n + l - 1, -1, -1):
        out[:, c] = idx % dims[c]
        idx //= dims[c]
    out.setflags(write=False)
    return out


def point_index(m: int, n: int, l: int, coords) -> int:
    k = 0
    for c, v in enumerate(coords):
        radix = m if c < n else 2
        if not 0 <= v < radix:
            raise PreconditionError("coordinate in range", f"coordinate {c + 1} = {v} out of range")
        k = k * radix + int(v)
    return k


class HammingFamily:
    """Immutable subset of Z_m^n × {0,1}^l."""

    __slots__ = ("m", "n", "l", "_ind")

    def __init__(self, m: int, n: int, l: int, membership):
        if m < 1 or n < 0 or l < 0:
            raise PreconditionError("m >= 1, n, l >= 0", f"bad shape ({m}, {n}, {l})")
        ind = np.array(membership, dtype=bool).reshape(-1)
        if ind.shape[0] != m**n * 2**l:
            raise PreconditionError("membership length m^n 2^l",
                                    f"got {ind.shape[0]}, expected {m**n * 2**l}")
        ind.setflags(write=False)
        self.m, self.n, self.l, self._ind = m, n, l, ind

    @classmethod
    def from_points(cls, m: int, n: int, l: int, points) -> "HammingFamily":
        ind = np.zeros(m**n * 2**l, dtype=bool)
        for pt in points:
            if len(pt) != n + l:
                raise PreconditionError("point length n + l", f"point {pt} has wrong length")
            ind[point_index(m, n, l, pt)] = True
        return cls(m, n, l, ind)

    @classmethod
    def from_strings(cls, m: int, words, l: int = 0) -> "HammingFamily":
        """Build from digit strings such as ``"01"``; all circular unless ``l`` given."""
        words = list(words)
        d = len(words[0]) if words else 0
        return cls.from_points(m, d - l, l, [[int(ch) for ch in w] for w in words])

    @property
    def membership(self) -> np.ndarray:
        return self._ind

    @property
    def size(self) -> int:
        return self._ind.shape[0]

    def points(self) -> np.ndarray:
        return coordinates(self.m, self.n, self.l)[self._ind]

    def __len__(self):
        return int(self._ind.sum())

    def __eq__(self, other):
        if not isinstance(other, HammingFamily):
            return NotImplemented
        return (self.m, self.n, self.l) == (other.m, other.n, other.l) and np.array_equal(self._ind, other._ind)

    def __hash__(self):
        return hash((self.m, self.n, self.l, np.packbits(self._ind).tobytes()))

    def __repr__(self):
        pts = ["".join(map(str, p)) for p in self.points()[:8]]
        return f"HammingFamily(m={self.m}, n={self.n}, l={self.l}, {pts}{'...' if len(self) > 8 else ''})"


def hybrid_measure(F: HammingFamily, s: int) -> Fraction:
    """Uniform on each Z_m coordinate, Bernoulli(s/m) on each binary one."""
    _check_s(F.m, s)
    p = Fraction(s, F.m)
    ones = coordinates(F.m, F.n, F.l)[:, F.n:].sum(axis=1) if F.l else np.zeros(F.size, dtype=np.int64)
    counts = np.bincount(ones[F.membership], minlength=F.l + 1)
    base = Fraction(1, F.m**F.n)
    return sum((int(c) * base * p**k * (1 - p) ** (F.l - k) for k, c in enumerate(counts) if c),
               Fraction(0))


def agreement_matrix(m: int, n: int, s: int, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Number of coordinates on which each row of X s-agrees with each row of Y."""
    if X.shape[0] == 0 or Y.shape[0] == 0:
        return np.zeros((X.shape[0], Y.shape[0]), dtype=np.int64)
    circ = (X[:, None, :n] - Y[None, :, :n]) % m if n else None
    total = np.zeros((X.shape[0], Y.shape[0]), dtype=np.int64)
    if n:
        total += ((circ < s) | (circ > m - s)).sum(axis=2)
    if X.shape[1] > n:
        total += ((X[:, None, n:] == 1) & (Y[None, :, n:] == 1)).sum(axis=2)
    return total


def is_t_agreeing_upto_s(F: HammingFamily, t: int, s: int) -> bool:
    """Every pair of members (a point with itself included) s-agrees on >= t coordinates."""
    _check_s(F.m, s)
    pts = F.points()
    if pts.shape[0] == 0:
        return True
    return bool((agreement_matrix(F.m, F.n, s, pts, pts) >= t).all())


def sigma_masks(m: int, n: int, l: int, y, s: int) -> np.ndarray:
    """σ_y of every point as a bitmask over n + l set positions."""
    _check_s(m, s)
    y = np.asarray(list(y), dtype=np.int64)
    if y.shape[0] != n:
        raise PreconditionError("len(y) = n", f"y has {y.shape[0]} coordinates, expected {n}")
    coords = coordinates(m, n, l)
    masks = np.zeros(coords.shape[0], dtype=np.int64)
    for i in range(n):
        diff = (coords[:, i] - y[i]) % m
        masks |= ((diff >= 1) & (diff <= s)).astype(np.int64) << i
    for j in range(l):
        masks |= coords[:, n + j] << (n + j)
    return masks


def sigma_pullback(G: SetFamily, y, s: int, m: int) -> HammingFamily:
    """σ_y^{-1}(G) on Z_m^n × {0,1}^l, with n = len(y) and l = G.n - n."""
    y = list(y)
    n = len(y)
    l = G.n - n
    if l < 0:
        raise PreconditionError("G on n + l points", f"G has {G.n} points but y has {n} coordinates")
    masks = sigma_masks(m, n, l, y, s)
    return HammingFamily(m, n, l, G.indicator[masks])


def is_equivalent_to_set_family(F: HammingFamily, s: int):
    """(y, G) with F = σ_y^{-1}(G) for the first such y in lexicographic order, else None."""
    width = F.n + F.l
    for y in product(range(F.m), repeat=F.n):
        masks = sigma_masks(F.m, F.n, F.l, y, s)
        inside = np.zeros(1 << width, dtype=bool)
        inside[masks[F.membership]] = True
        G = SetFamily(width, inside)
        if np.array_equal(G.indicator[masks], F.membership):
            return tuple(y), G
    return None


# --- half-integral stable set program -------------------------------------

@dataclass(frozen=True)
class StableSetInstance:
    """max Σ weight_x v_x  s.t.  0 <= v <= 1,  v_x + v_y <= 1 on edges (loops allowed)."""

    vertices: tuple
    weights: tuple
    edges: tuple  # (i, j) with i <= j; (i, i) is a loop
    solution: tuple | None = None

    def __post_init__(self):
        k = len(self.vertices)
        if len(self.weights) != k:
            raise PreconditionError("one weight per vertex")
        for i, j in self.edges:
            if not (0 <= i < k and 0 <= j < k):
                raise PreconditionError("edge endpoints are vertices", f"edge {(i, j)}")
        if self.solution is not None and not is_feasible(self, self.solution):
            raise PreconditionError("feasible solution", "solution violates the constraints")

    def neighbour_masks(self) -> tuple[list[int], int]:
        adj = [0] * len(self.vertices)
        loops = 0
        for i, j in self.edges:
            if i == j:
                loops |= 1 << i
            else:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        return adj, loops

    def objective(self, v=None) -> Fraction:
        v = self.solution if v is None else v
        return sum((Fraction(w) * Fraction(x) for w, x in zip(self.weights, v)), Fraction(0))

    def with_solution(self, v) -> "StableSetInstance":
        return StableSetInstance(self.vertices, self.weights, self.edges, tuple(Fraction(x) for x in v))


def is_feasible(inst: StableSetInstance, v) -> bool:
    if len(v) != len(inst.vertices):
        return False
    if any(not 0 <= x <= 1 for x in v):
        return False
    return all(v[i] + v[j] <= 1 for i, j in inst.edges)


def _integer_weights(weights) -> list[int]:
    fr = [Fraction(w) for w in weights]
    scale = lcm(*(w.denominator for w in fr)) if fr else 1
    return [int(w * scale) for w in fr]


def half_integral_max(inst: StableSetInstance) -> tuple:
    """An optimal {0, 1/2, 1} solution via the bipartite double cover.

    Each vertex x gets a left copy x' and a right copy x''; every edge (and
    loop) xy becomes x'y'' and y'x''.  A minimum s-t cut gives a maximum
    weight stable set of the double; averaging its two copies gives the
    half-integral optimum.  The source side used is the set reachable in
    the residual graph, which makes the choice deterministic.
    """
    k = len(inst.vertices)
    weights = _integer_weights(inst.weights)
    if any(w <= 0 for w in weights):
        raise PreconditionError("positive weights", "stable set weights must be positive")
    if k == 0:
        return ()
    D = nx.DiGraph()
    D.add_node("s")
    D.add_node("t")
    for x, w in enumerate(weights):
        D.add_edge("s", ("L", x), capacity=w)
        D.add_edge(("R", x), "t", capacity=w)
    for i, j in inst.edges:
        D.add_edge(("L", i), ("R", j))
        D.add_edge(("L", j), ("R", i))
    _, (source_side, _) = nx.minimum_cut(D, "s", "t")
    half = Fraction(1, 2)
    return tuple(half * ((("L", x) in source_side) + (("R", x) not in source_side)) for x in range(k))


def half_integral_exhaustive(inst: StableSetInstance) -> tuple[Fraction, tuple, int]:
    """Best objective over all {0, 1/2, 1} points, one optimum, and the number of optima.

    Any half-integral point can be raised to 1 on a stable set I of
    loop-free vertices, 0 on N(I) and 1/2 elsewhere without losing value,
    and those points are distinct for distinct I, so scanning stable sets
    covers every candidate optimum.
    """
    k = len(inst.vertices)
    if k > EXHAUSTIVE_CAP:
        raise PreconditionError(f"at most {EXHAUSTIVE_CAP} vertices", f"{k} vertices")
    fr = [Fraction(w) for w in inst.weights]
    scale = lcm(*(w.denominator for w in fr)) if fr else 1
    weights = [int(w * scale) for w in fr]
    adj, loops = inst.neighbour_masks()
    twice_best, best_i, count = kernels.half_integral_exhaustive(
        np.array(adj, dtype=np.uint64), loops, np.array(weights, dtype=np.int64))
    nb = 0
    for x in range(k):
        if (best_i >> x) & 1:
            nb |= adj[x]
    v = tuple(Fraction(1) if (best_i >> x) & 1 else Fraction(0) if (nb >> x) & 1 else Fraction(1, 2)
              for x in range(k))
    return Fraction(twice_best, 2 * scale), v, count


def half_integral_bruteforce(inst: StableSetInstance) -> Fraction:
    """Literal scan over all 3^k half-integral vectors (tests only)."""
    best = None
    grid = (Fraction(0), Fraction(1, 2), Fraction(1))
    for v in product(grid, repeat=len(inst.vertices)):
        if is_feasible(inst, v):
            val = inst.objective(v)
            best = val if best is None else max(best, val)
    return best if best is not None else Fraction(0)


# --- coordinate reduction ---------------------------------------------------

def _context_measure(m: int, n: int, l: int, s: int) -> np.ndarray:
    """Hybrid point mass of each context, as Fractions (object array)."""
    p = Fraction(s, m)
    base = Fraction(1, m**n)
    coords = coordinates(m, n, l)
    ones = coords[:, n:].sum(axis=1) if l else np.zeros(coords.shape[0], dtype=np.int64)
    table = [base * p**k * (1 - p) ** (l - k) for k in range(l + 1)]
    return np.array([table[int(k)] for k in ones], dtype=object)


def reduce_coordinate(F: HammingFamily, t: int, s: int):
    """Trade the last circular coordinate for a new binary one without losing measure.

    Returns ``(H, instance)``; H lives on Z_m^{n-1} × {0,1}^{l+1} with the
    new binary coordinate placed first among the binary ones.
    """
    m, n, l = F.m, F.n, F.l
    _check_s(m, s)
    if n < 1:
        raise PreconditionError("n >= 1", "no circular coordinate left to reduce")
    if not is_t_agreeing_upto_s(F, t, s):
        raise PreconditionError("t-agreeing up to s", f"family is not {t}-agreeing up to {s}")
    hi, lo = m ** (n - 1), 2**l
    cube = F.membership.reshape(hi, m, lo)
    fibers = np.transpose(cube, (0, 2, 1)).reshape(hi * lo, m)  # context -> Z_m indicator
    sizes = fibers.sum(axis=1)
    verts = np.flatnonzero(sizes)
    ctx = coordinates(m, n - 1, l)
    pts = ctx[verts]
    agree = agreement_matrix(m, n - 1, s, pts, pts)
    bad = agree < t
    k = len(verts)
    edges = tuple((i, j) for i in range(k) for j in range(i, k) if bad[i, j])
    masses = _context_measure(m, n - 1, l, s)
    labels = tuple(tuple(int(c) for c in ctx[v]) for v in verts)
    new = np.zeros((hi, 2, lo), dtype=bool)

    def put(v, alphas):
        c_hi, c_lo = divmod(int(v), lo)
        for a in alphas:
            new[c_hi, a, c_lo] = True

    if n + l == t:
        for v in verts:
            put(v, (1,))
        inst = StableSetInstance(labels, tuple(masses[v] for v in verts), edges,
                                 tuple(Fraction(1, 2) for _ in verts))
        return HammingFamily(m, n - 1, l + 1, new.reshape(-1)), inst

    touched = np.zeros(k, dtype=bool)
    for i, j in edges:
        touched[i] = touched[j] = True
    core = [i for i in range(k) if touched[i]]
    for i in range(k):
        if not touched[i]:
            put(verts[i], (0, 1))
    pos = {i: c for c, i in enumerate(core)}
    core_edges = tuple((pos[i], pos[j]) for i, j in edges)
    inst = StableSetInstance(tuple(labels[i] for i in core), tuple(masses[verts[i]] for i in core),
                             core_edges)
    if (s, m) == (1, 2):
        w = tuple(Fraction(1, 2) for _ in core)
    else:
        w = half_integral_max(inst) if core else ()
    for c, i in enumerate(core):
        if w[c] == 1:
            put(verts[i], (0, 1))
        elif w[c] == Fraction(1, 2):
            put(verts[i], (1,))
    return HammingFamily(m, n - 1, l + 1, new.reshape(-1)), inst.with_solution(w)


def binary_to_set_family(H: HammingFamily) -> SetFamily:
    """A family with no circular coordinates read as sets over its binary positions."""
    if H.n != 0:
        raise PreconditionError("no circular coordinates", f"{H.n} circular coordinates remain")
    l = H.l
    idx = np.arange(1 << l, dtype=np.int64)
    # index has b_1 most significant; set position j is bit j-1
    masks = np.zeros_like(idx)
    for j in range(l):
        masks |= ((idx >> (l - 1 - j)) & 1) << j
    ind = np.zeros(1 << l, dtype=bool)
    ind[masks[H.membership]] = True
    return SetFamily(l, ind)


def reduce_full(F: HammingFamily, t: int, s: int, chain: bool = False):
    """Reduce every circular coordinate; the result is a t-intersecting set family.

    With ``chain=True`` also returns the hybrid measure after each step
    (starting with the input) and the stable set instances used.
    """
    measures = [hybrid_measure(F, s)]
    instances = []
    H = F
    while H.n:
        H, inst = reduce_coordinate(H, t, s)
        measures.append(hybrid_measure(H, s))
        instances.append(inst)
    G = binary_to_set_family(H)
    return (G, measures, instances) if chain else G


# --- brute force --------------------------------------------------------------

def _hamming_graph(m: int, n: int, t: int, s: int):
    pts = coordinates(m, n, 0)
    agree = agreement_matrix(m, n, s, pts, pts) >= t
    k = pts.shape[0]
    self_ok = np.diag(agree)
    verts = [v for v in range(k) if self_ok[v]]
    pos = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for v in verts:
        row = 0
        for u in np.flatnonzero(agree[v]):
            if u != v and int(u) in pos:
                row |= 1 << pos[int(u)]
        adj[pos[v]] = row
    return verts, adj


def hamming_oracle(m: int, n: int, t: int, s: int, count: bool = True, witness: bool = False,
                   threads: int | None = None):
    """Largest t-agreeing-up-to-s family in Z_m^n and the number of maximizers.

    ``count=False`` skips tie counting (the count can be astronomically
    large) and reports 1.  ``witness=True`` adds one optimal family.
    """
    _check_s(m, s)
    if t < 1 or n < t:
        raise PreconditionError("n >= t >= 1", f"invalid (n, t) = ({n}, {t})")
    if m**n > ORACLE_CAP:
        raise PreconditionError(f"m^n <= {ORACLE_CAP}", f"{m}^{n} = {m**n} above cap")
    verts, adj = _hamming_graph(m, n, t, s)
    res = max_weight_clique(adj, [1] * len(verts), count=count, collect=witness,
                            threads=threads)
    if not witness:
        return res.best, res.count
    ind = np.zeros(m**n, dtype=bool)
    clique = res.cliques[0]
    for i, v in enumerate(verts):
        if (clique >> i) & 1:
            ind[v] = True
    return res.best, res.count, HammingFamily(m, n, 0, ind)


def hamming_enumerate_optimal(m: int, n: int, t: int, s: int, threads: int | None = None):
    _check_s(m, s)
    if m**n > 64:
        raise PreconditionError("m^n <= 64", f"{m}^{n} too large to enumerate")
    verts, adj = _hamming_graph(m, n, t, s)
    res = max_weight_clique(adj, [1] * len(verts), count=True, collect=True, threads=threads)
    out = []
    for clique in res.cliques:
        ind = np.zeros(m**n, dtype=bool)
        for i, v in enumerate(verts):
            if (clique >> i) & 1:
                ind[v] = True
        out.append(HammingFamily(m, n, 0, ind))
    return out


# --- HAMFAM 1 text format -------------------------------------------------------

HAMFAM_HEADER = "HAMFAM 1"


def dumps_hamfam(F: HammingFamily) -> str:
    lines = [HAMFAM_HEADER, f"m={F.m}", f"n={F.n}", f"l={F.l}"]
    lines += [" ".join(str(int(c)) for c in p) for p in F.points()]
    return "\n".join(lines) + "\n"


def loads_hamfam(text: str) -> HammingFamily:
    lines = text.splitlines()
    if not lines or lines[0].strip() != HAMFAM_HEADER:
        raise ParseError(1, f"expected header {HAMFAM_HEADER!r}")
    shape = []
    for lineno, key in ((2, "m"), (3, "n"), (4, "l")):
        if len(lines) < lineno or not lines[lineno - 1].strip().startswith(key + "="):
            raise ParseError(lineno, f"expected '{key}=<int>'")
        try:
            shape.append(int(lines[lineno - 1].strip()[2:]))
        except ValueError:
            raise ParseError(lineno, f"bad value for {key}") from None
    m, n, l = shape
    if m < 1 or n < 0 or l < 0 or m**n * 2**l > 1 << 24:
        raise ParseError(2, f"unsupported shape m={m} n={n} l={l}")
    ind = np.zeros(m**n * 2**l, dtype=bool)
    for lineno, raw in enumerate(lines[4:], start=5):
        line = raw.strip()
        if not line:
            continue
        try:
            pt = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(lineno, f"non-integer coordinate in {line!r}") from None
        if len(pt) != n + l:
            raise ParseError(lineno, f"expected {n + l} coordinates, got {len(pt)}")
        try:
            k = point_index(m, n, l, pt)
        except PreconditionError as exc:
            raise ParseError(lineno, str(exc)) from None
        if ind[k]:
            raise ParseError(lineno, f"duplicate point {line!r}")
        ind[k] = True
    return HammingFamily(m, n, l, ind)
