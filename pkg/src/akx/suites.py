"""Verification suites behind ``akx verify`` and the acceptance tests.

Each check yields one :class:`Check`; ``Check.line()`` is the
machine-readable form ``STATUS<TAB>suite<TAB>check<TAB>detail``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterator

import numpy as np

from .circle import MAX_M, verify_katona_cross
from .closed_form import (
    breakpoint,
    compare_frankl,
    curve_rows,
    curve_breakpoints,
    mu_frankl,
    r_star,
    w_closed,
    window,
)
from .family import (
    PreconditionError,
    SetFamily,
    canonical_form,
    frankl,
    frankl_equivalence_witness,
    is_t_intersecting,
    mask_range,
    measure,
    popcounts,
    up_set,
)
from .generating import (
    generating_data,
    gs2_predicted,
    gs2_transform,
    gs3_average_gain,
    gs3_predicted,
    gs3_transform,
    intersection_number,
    is_trivial,
)
from .hamming import (
    HammingFamily,
    StableSetInstance,
    half_integral_exhaustive,
    half_integral_max,
    hamming_enumerate_optimal,
    hamming_oracle,
    hybrid_measure,
    is_equivalent_to_set_family,
    is_feasible,
    is_t_agreeing_upto_s,
    reduce_full,
)
from .lifting import (
    convergence_probe,
    lifted_measure,
    level_sum_identity,
    uniform_frankl_count,
)
from .oracle import enumerate_optimal, max_uniform_t_intersecting, max_weight_t_intersecting
from .shifting import is_fully_stable, is_left_compressed, left_compress, shift_ij, stabilize
from .symmetrization import (
    sym2_identity_sides,
    sym2_transform,
    sym3_predicted,
    sym3_threshold,
    sym3_transform,
    sym3plus_improve,
    symmetry_data,
)

SEED = 20240601
HALF = Fraction(1, 2)
SAMPLE_P = (Fraction(1, 5), Fraction(1, 3), Fraction(2, 5), HALF, Fraction(3, 5))


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}\t{self.suite}\t{self.name}\t{self.detail}"


# --- random inputs ---------------------------------------------------------

def random_family(rng: random.Random, n: int) -> SetFamily:
    density = rng.uniform(0.05, 0.95)
    gen = np.random.default_rng(rng.getrandbits(63))
    return SetFamily(n, gen.random(1 << n) < density)


def random_t_intersecting(rng: random.Random, n: int, t: int, sparse: bool = False) -> SetFamily:
    """Greedy random t-intersecting family; maximal (hence monotone) unless ``sparse``."""
    idx = mask_range(n)
    pc = popcounts(n)
    allowed = pc >= t
    order = list(range(1 << n))
    rng.shuffle(order)
    keep = rng.uniform(0.2, 1.0) if sparse else 1.0
    ind = np.zeros(1 << n, dtype=bool)
    for x in order:
        if not allowed[x] or (sparse and ind.any() and rng.random() > keep):
            continue
        ind[x] = True
        allowed &= pc[idx & x] >= t
    return SetFamily(n, ind)


def random_compressed(rng: random.Random, n: int, t: int) -> SetFamily:
    F = up_set(random_t_intersecting(rng, n, t, sparse=True))
    return up_set(left_compress(F)[0])


# --- criterion 1: closed form against the oracle -------------------------------

def oracle_grid(n: int, t: int) -> list[Fraction]:
    pts = {Fraction(k, 20) for k in range(1, 20)} | {HALF}
    r = 0
    while t + 2 * r + 2 <= n:
        pts.add(breakpoint(t, r))
        r += 1
    return sorted(pts)


def check_closed_form_oracle(nmax: int = 5) -> Iterator[Check]:
    for n in range(1, nmax + 1):
        for t in range(1, n + 1):
            bad = []
            grid = oracle_grid(n, t)
            for p in grid:
                got, _ = max_weight_t_intersecting(n, t, p, count=False)
                want = w_closed(n, t, p).value
                if got != want:
                    bad.append(f"p={p} oracle={got} closed={want}")
            yield Check("closed-form", f"oracle n={n} t={t}", not bad,
                        "; ".join(bad) if bad else f"{len(grid)} p values")


# --- criterion 2: shape of the optimal families -----------------------------------

def check_uniqueness(nmax: int = 4) -> Iterator[Check]:
    for n in range(1, nmax + 1):
        for t in range(1, n + 1):
            cuts = {breakpoint(t, r) for r in range(n)}
            for k in range(1, 20):
                p = Fraction(k, 20)
                if p in cuts or (t == 1 and p >= HALF):
                    continue
                res = w_closed(n, t, p)
                (r,) = res.optimal_r
                fams = enumerate_optimal(n, t, p)
                shaped = all(frankl_equivalence_witness(F, t, r) is not None for F in fams)
                want = comb(n, t + 2 * r)
                ok = shaped and len(fams) == want
                yield Check("closed-form", f"unique n={n} t={t} p={p}", ok,
                            f"{len(fams)} optima, expected {want} copies of r={r}")
            if t == 1:
                # p_{1,r} = 1/2 for every r, where optima are far from unique
                if n >= 3:
                    classes = {canonical_form(F) for F in enumerate_optimal(n, 1, HALF)}
                    frankls = {canonical_form(frankl(n, 1, r)) for r in range(r_star(n, 1) + 1)}
                    yield Check("closed-form", f"many-classes n={n} t=1 p=1/2",
                                frankls <= classes and len(classes) >= len(frankls),
                                f"{len(classes)} classes, {len(frankls)} Frankl")
                continue
            r = 0
            while t + 2 * r + 2 <= n:
                p = breakpoint(t, r)
                fams = enumerate_optimal(n, t, p)
                classes = {canonical_form(F) for F in fams}
                expected = {canonical_form(frankl(n, t, r)), canonical_form(frankl(n, t, r + 1))}
                yield Check("closed-form", f"two-classes n={n} t={t} p={p}", classes == expected,
                            f"{len(classes)} classes")
                r += 1
    fams = enumerate_optimal(4, 1, Fraction(3, 4))
    yield Check("closed-form", "count n=4 t=1 p=3/4", len(fams) == 2 ** (comb(4, 2) // 2),
                f"{len(fams)} optima")


# --- criterion 3: Frankl measure calculus ------------------------------------------

def check_frankl_calculus() -> Iterator[Check]:
    third = Fraction(1, 3)
    vals = (mu_frankl(2, 0, third), mu_frankl(2, 1, third))
    yield Check("closed-form", "equal at p=1/3 for t=2", vals == (Fraction(1, 9),) * 2,
                f"{vals[0]} {vals[1]}")
    bad = []
    for t in range(1, 6):
        for r in range(0, 6):
            cut = breakpoint(t, r)
            for k in range(1, 51):
                p = Fraction(k, 51)
                want = (p < cut) - (p > cut)
                if compare_frankl(t, r, p) != want:
                    bad.append(f"t={t} r={r} p={p}")
    yield Check("closed-form", "compare sign matches window", not bad,
                "; ".join(bad[:5]) if bad else "1500 grid points")


# --- criterion 10: w(20,t,p) curves ---------------------------------------------

def check_curves(n: int = 20, tmax: int = 5, grid: int = 200) -> Iterator[Check]:
    rows = curve_rows(n, tmax, grid)
    by_t: dict[int, list] = {}
    for row in rows:
        by_t.setdefault(row.t, []).append(row)
    for t, rs in by_t.items():
        ps = [r.p for r in rs]
        ws = [r.w.value for r in rs]
        mono = all(a <= b for a, b in zip(ws, ws[1:])) and all(a < b for a, b in zip(ps, ps[1:]))
        yield Check("closed-form", f"curve t={t} nondecreasing", mono, f"{len(rs)} rows")
        bad = []
        for q in curve_breakpoints(n, t):
            r = next(r for r in range(1, r_star(n, t) + 1) if Fraction(r, t + 2 * r - 1) == q)
            left, right = mu_frankl(t, r - 1, q), mu_frankl(t, r, q)
            if t > 1 and not (left == right == w_closed(n, t, q).value):
                bad.append(str(q))
            if ps.count(q) != 1:
                bad.append(f"{q} not listed once")
        yield Check("closed-form", f"curve t={t} continuous at breakpoints", not bad, " ".join(bad))
    allp = sorted({r.p for r in rows})
    bad = [str(p) for p in allp
           if any(w_closed(n, t, p).value < w_closed(n, t + 1, p).value for t in range(1, tmax))]
    yield Check("closed-form", "curves ordered in t", not bad, " ".join(bad[:5]))


# --- criterion 4: shifting ---------------------------------------------------------

def check_shifting(per_n: int = 1000, nmax: int = 8, seed: int = SEED) -> Iterator[Check]:
    rng = random.Random(seed)
    for n in range(1, nmax + 1):
        stats = {"measure": 0, "intersection": 0, "compress": 0, "stabilize": 0}
        bad = {k: [] for k in stats}
        for it in range(per_n):
            t = rng.randint(1, min(3, n))
            F = random_t_intersecting(rng, n, t, sparse=True) if it % 2 else random_family(rng, n)
            inter = is_t_intersecting(F, t)
            if n >= 2:
                i, j = rng.sample(range(1, n + 1), 2)
                G = shift_ij(F, i, j)
                stats["measure"] += 1
                if any(measure(G, p) != measure(F, p) for p in SAMPLE_P):
                    bad["measure"].append(it)
                if inter:
                    stats["intersection"] += 1
                    if not is_t_intersecting(G, t):
                        bad["intersection"].append(it)
            C, _ = left_compress(F)
            stats["compress"] += 1
            if not is_left_compressed(C) or C.level_counts() != F.level_counts():
                bad["compress"].append(it)
            if inter and F:
                S = stabilize(F, t)
                stats["stabilize"] += 1
                sizes = popcounts(n)[S.indicator]
                if not (is_t_intersecting(S, t) and is_fully_stable(S) and 2 * int(sizes.min()) >= n + t - 1):
                    bad["stabilize"].append(it)
        for key, count in stats.items():
            yield Check("shifting", f"{key} n={n}", not bad[key],
                        f"{count} cases" + (f", failing {bad[key][:5]}" if bad[key] else ""))


# --- criterion 5: surgery identities -------------------------------------------------

def check_surgery(iterations: int = 1500, seed: int = SEED) -> Iterator[Check]:
    rng = random.Random(seed)
    names = ("gs2", "gs3", "sym2", "sym3", "sym3plus")
    cases = {k: 0 for k in names}
    gains = {k: 0 for k in names}
    bad: dict[str, list] = {k: [] for k in names}

    def fail(key, F, what):
        if len(bad[key]) < 5:
            bad[key].append(f"{what} on {F.indicator_int:#x}/n={F.n}")

    for _ in range(iterations):
        n = rng.randint(2, 8)
        F = random_compressed(rng, n, rng.randint(1, min(3, n)))
        if is_trivial(F):
            continue
        t = intersection_number(F)
        gd = generating_data(F)
        m = gd.extent
        base = {p: measure(F, p) for p in SAMPLE_P}

        for a in gd.by_size:
            b = m + t - a
            if a == b:
                continue
            F1, F2 = gs2_transform(F, a, b, t)
            cases["gs2"] += 1
            if not (is_t_intersecting(F1, t) and is_t_intersecting(F2, t)):
                fail("gs2", F, "lost intersection")
            for p in SAMPLE_P:
                got = (measure(F1, p), measure(F2, p))
                if got != gs2_predicted(F, a, b, p):
                    fail("gs2", F, f"identity p={p}")
                best = max(got)
                if (p < HALF and not best > base[p]) or (p == HALF and best < base[p]):
                    fail("gs2", F, f"no gain p={p}")
                gains["gs2"] += best > base[p]

        a = (m + t) // 2
        if m > 1 and (m + t) % 2 == 0 and a in gd.by_size:
            outs = [gs3_transform(F, i, t) for i in range(1, m)]
            cases["gs3"] += 1
            if not all(is_t_intersecting(G, t) for G in outs):
                fail("gs3", F, "lost intersection")
            for p in SAMPLE_P:
                ms = [measure(G, p) for G in outs]
                if any(mu != gs3_predicted(F, i, p, t) for i, mu in enumerate(ms, start=1)):
                    fail("gs3", F, f"identity p={p}")
                if sum(ms, Fraction(0)) / (m - 1) - base[p] != gs3_average_gain(F, p, t):
                    fail("gs3", F, f"average p={p}")
                if p < Fraction(m - t, 2 * (m - 1)) and not max(ms) > base[p]:
                    fail("gs3", F, f"no gain p={p}")
                gains["gs3"] += max(ms) > base[p]

        sd = symmetry_data(F)
        ell = sd.sym_extent
        if ell < n:
            for a in sd.slices:
                b = ell + t - a
                if a == b or not 0 <= b <= ell:
                    continue
                F1, F2 = sym2_transform(F, a, b, t)
                cases["sym2"] += 1
                if not (is_t_intersecting(F1, t) and is_t_intersecting(F2, t)):
                    fail("sym2", F, "lost intersection")
                for p in SAMPLE_P:
                    lhs, rhs = sym2_identity_sides(F, a, b, p, t)
                    if lhs != rhs:
                        fail("sym2", F, f"identity p={p}")
                    best = max(measure(F1, p), measure(F2, p))
                    if t > 1 and not best > base[p]:
                        fail("sym2", F, f"no gain p={p}")
                    gains["sym2"] += best > base[p]
            try:
                G = sym3_transform(F, t)
            except PreconditionError:
                G = None
            if G is not None:
                cases["sym3"] += 1
                if not is_t_intersecting(G, t):
                    fail("sym3", F, "lost intersection")
                cut = sym3_threshold(ell, t)
                for p in SAMPLE_P:
                    mu = measure(G, p)
                    if mu != sym3_predicted(F, p, t):
                        fail("sym3", F, f"identity p={p}")
                    if (mu > base[p]) != (p > cut):
                        fail("sym3", F, f"gain direction p={p}")
                    gains["sym3"] += mu > base[p]

        if (n + t) % 2 == 0 and (ell < m or m < n):
            for p in SAMPLE_P:
                if not sym3_threshold(ell, t) < p <= HALF:
                    continue
                cases["sym3plus"] += 1
                H = sym3plus_improve(F, p, t)
                if H is None or H.n != n or not is_t_intersecting(H, t) or not measure(H, p) > base[p]:
                    fail("sym3plus", F, f"no strict improvement p={p}")
                else:
                    gains["sym3plus"] += 1

    for key in names:
        ok = not bad[key] and cases[key] > 0 and gains[key] > 0
        yield Check("surgery", key, ok,
                    f"{cases[key]} instances, {gains[key]} strict gains" + ("; " + "; ".join(bad[key]) if bad[key] else ""))


# --- criterion 6: discrete circle ----------------------------------------------------

def check_cross_agreeing(mmax: int = MAX_M) -> Iterator[Check]:
    for m in range(2, mmax + 1):
        for s in range(1, m // 2 + 1):
            rep = verify_katona_cross(m, s)
            ok = rep.ok and rep.max_sum == 2 * s and rep.max_self == s
            yield Check("katona", f"m={m} s={s}", ok,
                        f"max |A|+|B|={rep.max_sum}, max self={rep.max_self}, "
                        f"{len(rep.equality_pairs)} equality pairs" + (f", {rep.failures[:3]}" if rep.failures else ""))


# --- criteria 7 and 8: Hamming scheme --------------------------------------------------

def hamming_instances(cap: int = 64):
    for m in range(2, cap + 1):
        n = 1
        while m**n <= cap:
            for s in range(1, m // 2 + 1):
                for t in range(1, n + 1):
                    yield m, n, t, s
            n += 1


def check_hamming(cap: int = 64, collect: list | None = None) -> Iterator[Check]:
    """Oracle against the closed form, then the reduction chain on an optimal witness.

    Stable set instances produced along the way are appended to ``collect``.
    """
    named = {(3, 2, 1, 1): 3, (4, 2, 1, 1): 4, (4, 2, 1, 2): 8, (2, 3, 2, 1): 2}
    bad_value, bad_chain, count = [], [], 0
    for m, n, t, s in hamming_instances(cap):
        count += 1
        best, _, W = hamming_oracle(m, n, t, s, count=False, witness=True)
        want = m**n * w_closed(n, t, Fraction(s, m)).value
        if best != want:
            bad_value.append(f"{(m, n, t, s)}: {best} != {want}")
        if (m, n, t, s) in named and best != named[(m, n, t, s)]:
            bad_value.append(f"{(m, n, t, s)}: {best} != {named[(m, n, t, s)]}")
        G, chain, insts = reduce_full(W, t, s, chain=True)
        if collect is not None:
            collect.extend(i for i in insts if len(i.vertices) <= 20)
        if any(b < a for a, b in zip(chain, chain[1:])) or not is_t_intersecting(G, t) \
                or measure(G, Fraction(s, m)) != chain[-1]:
            bad_chain.append(str((m, n, t, s)))
    yield Check("hamming", "oracle equals m^n w(n,t,s/m)", not bad_value,
                f"{count} instances" + ("; " + "; ".join(bad_value[:5]) if bad_value else ""))
    yield Check("hamming", "reduction chain nondecreasing", not bad_chain,
                f"{count} instances" + ("; " + " ".join(bad_chain[:5]) if bad_chain else ""))

    exotic = HammingFamily.from_strings(4, "00 01 12 13 20 21 32 33".split())
    G, chain, _ = reduce_full(exotic, 1, 2, chain=True)
    ok = (is_t_agreeing_upto_s(exotic, 1, 2) and hybrid_measure(exotic, 2) == HALF
          and is_equivalent_to_set_family(exotic, 2) is None and chain[-1] == HALF)
    yield Check("hamming", "exotic optimum at s=m/2", ok, f"chain {' '.join(map(str, chain))}")

    bad, total = [], 0
    for m, n, t, s in hamming_instances(27):
        if 2 * s >= m:
            continue
        for F in hamming_enumerate_optimal(m, n, t, s):
            total += 1
            if is_equivalent_to_set_family(F, s) is None:
                bad.append(str((m, n, t, s)))
    yield Check("hamming", "optima are pullbacks when s < m/2", not bad,
                f"{total} optimal families" + ("; " + " ".join(bad[:5]) if bad else ""))


def random_stable_instances(count: int = 500, seed: int = SEED) -> list[StableSetInstance]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        k = rng.randint(1, 12)
        density = rng.random()
        edges = tuple((i, j) for i in range(k) for j in range(i, k)
                      if rng.random() < (density if i != j else density / 8))
        weights = tuple(Fraction(rng.randint(1, 12), rng.randint(1, 6)) for _ in range(k))
        out.append(StableSetInstance(tuple(range(k)), weights, edges))
    return out


def five_cycle() -> StableSetInstance:
    return StableSetInstance(tuple(range(5)), (Fraction(1),) * 5,
                             tuple(tuple(sorted((i, (i + 1) % 5))) for i in range(5)))


def check_half_integrality(extra: list | None = None) -> Iterator[Check]:
    cyc = five_cycle()
    v = half_integral_max(cyc)
    yield Check("hamming", "five-cycle optimum 5/2",
                cyc.objective(v) == Fraction(5, 2) and all(x == HALF for x in v), str(cyc.objective(v)))
    pool = random_stable_instances() + [i for i in (extra or []) if i.vertices]
    bad = []
    for inst in pool:
        v = half_integral_max(inst)
        best, _, _ = half_integral_exhaustive(inst)
        if not is_feasible(inst, v) or any(x not in (0, HALF, 1) for x in v) or inst.objective(v) != best:
            bad.append(f"{len(inst.vertices)} vertices")
    yield Check("hamming", "min-cut optimum matches exhaustive", not bad,
                f"{len(pool)} instances" + ("; " + ", ".join(bad[:5]) if bad else ""))


# --- criterion 9: lifting --------------------------------------------------------------

def check_lifting(families: int = 1000, seed: int = SEED) -> Iterator[Check]:
    a = uniform_frankl_count(5, 3, 2, 1)
    b, _ = max_uniform_t_intersecting(5, 3, 2)
    yield Check("lifting", "uniform Frankl (5,3,2,1)", a == b == 4, f"count={a} oracle={b}")
    c, _ = max_uniform_t_intersecting(5, 2, 1)
    yield Check("lifting", "uniform star (5,2,1)", c == 4 == comb(4, 1), f"oracle={c}")

    ns = [8 * 2**i for i in range(8)]
    gaps = [g for _, g in convergence_probe(frankl(2, 2, 0), Fraction(1, 4), ns)]
    yield Check("lifting", "probe gaps decrease for t=2 r=0 p=1/4",
                all(x > y for x, y in zip(gaps, gaps[1:])),
                " ".join(f"{float(g):.3g}" for g in gaps))

    rng = random.Random(seed)
    bad = 0
    for _ in range(families):
        F = random_family(rng, rng.randint(0, 10))
        p = Fraction(rng.randint(1, 19), 20)
        bad += not level_sum_identity(F, p)
    yield Check("lifting", "level sum identity", bad == 0, f"{families} families, {bad} failures")

    yield check_lifted_exhaustive()

    bad_ak, tried = [], 0
    for n in range(1, 10):
        for k in range(n + 1):
            if comb(n, k) > 64:
                continue
            for t in range(1, k + 1):
                x = Fraction(k - t + 1, n)
                for r in range(0, n):
                    if t + 2 * r > n:
                        break
                    low, high = window(t, r)
                    if low < x < high:
                        tried += 1
                        got, _ = max_uniform_t_intersecting(n, k, t)
                        want = uniform_frankl_count(n, k, t, r)
                        if got != want:
                            bad_ak.append(f"(n,k,t)={(n, k, t)} r={r}: {got} != {want}")
    yield Check("lifting", "uniform optimum is Frankl inside windows", not bad_ak,
                f"{tried} cases" + ("; " + "; ".join(bad_ak[:5]) if bad_ak else ""))


def check_lifted_exhaustive(mmax: int = 4, nmax: int = 10) -> Check:
    """lifted_measure against a direct count of k-subsets, for every H on m <= 4 points.

    The count side enumerates k-subsets of [n] and tallies their traces on
    [m]; lifted_measure is evaluated once per level profile, which is all
    it depends on.
    """
    bad = []
    for m in range(mmax + 1):
        size = 1 << m
        fams = ((np.arange(1 << size)[:, None] >> np.arange(size)[None, :]) & 1).astype(np.int64)
        levels = popcounts(m)
        profiles = np.stack([fams[:, levels == j].sum(axis=1) for j in range(m + 1)], axis=1)
        uniq, inverse = np.unique(profiles, axis=0, return_inverse=True)
        reps = [int(np.flatnonzero(inverse.reshape(-1) == u)[0]) for u in range(len(uniq))]
        for n in range(m, nmax + 1):
            idx = mask_range(n)
            pcs = popcounts(n)
            for k in range(n + 1):
                traces = np.bincount(idx[pcs == k] & (size - 1), minlength=size)
                direct = fams @ traces
                total = comb(n, k)
                lifted = [lifted_measure(SetFamily(m, fams[r].astype(bool)), n, k) for r in reps]
                want = np.array([int(x * total) for x in lifted], dtype=np.int64)[inverse.reshape(-1)]
                if any(total % x.denominator for x in lifted) or not np.array_equal(direct, want):
                    bad.append((m, n, k))
    return Check("lifting", "lifted measure equals count quotient", not bad,
                 f"all H on m<={mmax}, n<={nmax}, every k" + (f"; {bad[:3]}" if bad else ""))


# --- registry --------------------------------------------------------------------------

def reduction_instances(cap: int = 64) -> list[StableSetInstance]:
    """Stable set instances met while reducing one optimal family per Hamming instance."""
    pool = []
    for m, n, t, s in hamming_instances(cap):
        _, _, W = hamming_oracle(m, n, t, s, count=False, witness=True)
        _, _, insts = reduce_full(W, t, s, chain=True)
        pool.extend(i for i in insts if 0 < len(i.vertices) <= 20)
    return pool


def _half_integrality_standalone() -> Iterator[Check]:
    yield from check_half_integrality(reduction_instances())


def _hamming_and_half() -> Iterator[Check]:
    pool: list = []
    yield from check_hamming(collect=pool)
    yield from check_half_integrality(pool)


CRITERIA: dict[int, Callable[[], Iterator[Check]]] = {
    1: check_closed_form_oracle,
    2: check_uniqueness,
    3: check_frankl_calculus,
    4: check_shifting,
    5: check_surgery,
    6: check_cross_agreeing,
    7: check_hamming,
    8: _half_integrality_standalone,
    9: check_lifting,
    10: check_curves,
}

SUITES: dict[str, Callable[[], Iterator[Check]]] = {
    "closed-form": lambda: (c for f in (check_closed_form_oracle, check_uniqueness,
                                        check_frankl_calculus, check_curves) for c in f()),
    "shifting": check_shifting,
    "surgery": check_surgery,
    "katona": check_cross_agreeing,
    "hamming": _hamming_and_half,
    "lifting": check_lifting,
}


def run_suite(name: str) -> Iterator[Check]:
    if name == "all":
        for key in SUITES:
            yield from SUITES[key]()
        return
    if name not in SUITES:
        raise KeyError(name)
    yield from SUITES[name]()
