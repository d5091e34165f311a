import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from akx.closed_form import w_closed
from akx.family import ParseError, PreconditionError, SetFamily, frankl, is_t_intersecting, measure
from akx.hamming import (
    HammingFamily,
    StableSetInstance,
    binary_to_set_family,
    dumps_hamfam,
    half_integral_bruteforce,
    half_integral_exhaustive,
    half_integral_max,
    hamming_enumerate_optimal,
    hamming_oracle,
    hybrid_measure,
    is_equivalent_to_set_family,
    is_feasible,
    is_t_agreeing_upto_s,
    loads_hamfam,
    point_index,
    reduce_coordinate,
    reduce_full,
    sigma_pullback,
)

F = Fraction
EXOTIC = HammingFamily.from_strings(4, "00 01 12 13 20 21 32 33".split())


def test_point_index_mixed_radix():
    assert point_index(3, 2, 1, (2, 1, 1)) == (2 * 3 + 1) * 2 + 1
    with pytest.raises(PreconditionError):
        point_index(3, 1, 0, (3,))


def test_hybrid_measure():
    assert hybrid_measure(HammingFamily(4, 1, 1, [True] * 8), 1) == 1
    single = HammingFamily.from_points(4, 1, 1, [(0, 1)])
    assert hybrid_measure(single, 1) == F(1, 16)


def test_agreement_examples():
    assert is_t_agreeing_upto_s(EXOTIC, 1, 2)
    assert not is_t_agreeing_upto_s(HammingFamily.from_strings(4, ["00", "22"]), 1, 1)
    assert is_t_agreeing_upto_s(HammingFamily.from_strings(5, ["31"]), 2, 1)


def test_singletons_need_binary_ones():
    # a binary zero never agrees, even with itself
    pt = HammingFamily.from_points(3, 1, 1, [(0, 0)])
    assert is_t_agreeing_upto_s(pt, 1, 1)
    assert not is_t_agreeing_upto_s(pt, 2, 1)


def test_sigma_pullback_star():
    G = frankl(1, 1, 0)
    assert sigma_pullback(G, (0,), 1, 4) == HammingFamily.from_strings(4, ["1"])
    H = sigma_pullback(frankl(2, 1, 0), (0, 0), 2, 4)
    assert len(H) == 8 and hybrid_measure(H, 2) == F(1, 2)


@given(st.integers(2, 5), st.integers(1, 2), st.integers(0, 1), st.data())
@settings(max_examples=40)
def test_pullback_preserves_measure_and_agreement(m, n, l, data):
    s = data.draw(st.integers(1, m // 2))
    t = data.draw(st.integers(1, n + l))
    bits = data.draw(st.integers(0, (1 << (1 << (n + l))) - 1))
    G = SetFamily(n + l, [(bits >> i) & 1 for i in range(1 << (n + l))])
    y = tuple(data.draw(st.integers(0, m - 1)) for _ in range(n))
    H = sigma_pullback(G, y, s, m)
    assert hybrid_measure(H, s) == measure(G, F(s, m))
    if is_t_intersecting(G, t):
        assert is_t_agreeing_upto_s(H, t, s)
    found = is_equivalent_to_set_family(H, s)
    assert found is not None
    y2, G2 = found
    assert sigma_pullback(G2, y2, s, m) == H


def test_exotic_family_is_not_a_pullback():
    assert is_equivalent_to_set_family(EXOTIC, 2) is None


def test_stable_set_examples():
    assert half_integral_max(StableSetInstance((0, 1, 2), (F(1),) * 3, ())) == (1, 1, 1)
    assert half_integral_max(StableSetInstance((0, 1), (F(3), F(1)), ((0, 1),))) == (1, 0)
    cyc = StableSetInstance(tuple(range(5)), (F(1),) * 5, tuple(tuple(sorted((i, (i + 1) % 5))) for i in range(5)))
    v = half_integral_max(cyc)
    assert v == (F(1, 2),) * 5 and cyc.objective(v) == F(5, 2)


def test_loop_caps_vertex_at_half():
    inst = StableSetInstance((0,), (F(2),), ((0, 0),))
    assert half_integral_max(inst) == (F(1, 2),)


@given(st.integers(1, 7), st.data())
@settings(max_examples=80)
def test_min_cut_matches_enumeration(k, data):
    edges = tuple(sorted({tuple(sorted(data.draw(st.tuples(st.integers(0, k - 1), st.integers(0, k - 1)))))
                          for _ in range(data.draw(st.integers(0, 10)))}))
    weights = tuple(F(data.draw(st.integers(1, 9)), data.draw(st.integers(1, 4))) for _ in range(k))
    inst = StableSetInstance(tuple(range(k)), weights, edges)
    v = half_integral_max(inst)
    assert is_feasible(inst, v)
    best, w, _ = half_integral_exhaustive(inst)
    assert inst.objective(v) == best == inst.objective(w)
    if k <= 5:
        assert best == half_integral_bruteforce(inst)


def test_instance_validation():
    with pytest.raises(PreconditionError):
        StableSetInstance((0,), (F(1),), ((0, 1),))
    with pytest.raises(PreconditionError):
        StableSetInstance((0, 1), (F(1), F(1)), ((0, 1),), (F(1), F(1)))


def test_reduce_coordinate_shapes_and_measure():
    H, inst = reduce_coordinate(EXOTIC, 1, 2)
    assert (H.m, H.n, H.l) == (4, 1, 1)
    assert hybrid_measure(H, 2) >= hybrid_measure(EXOTIC, 2)
    assert is_t_agreeing_upto_s(H, 1, 2)
    assert inst.solution is not None


def test_reduce_degenerate_case():
    # n + l = t: nonempty fibers become {1}
    Fm = HammingFamily.from_strings(4, ["00", "01", "10", "11"])
    H, inst = reduce_coordinate(Fm, 2, 2)
    assert set(map(tuple, H.points())) == {(0, 1), (1, 1)}
    assert hybrid_measure(H, 2) == hybrid_measure(Fm, 2) == F(1, 4)
    assert all(x == F(1, 2) for x in inst.solution)


def test_reduce_empty():
    E = HammingFamily(3, 2, 0, [False] * 9)
    G, chain, _ = reduce_full(E, 1, 1, chain=True)
    assert not G and chain == [0, 0, 0]


def test_reduce_requires_agreement_and_coordinate():
    with pytest.raises(PreconditionError):
        reduce_coordinate(HammingFamily.from_strings(4, ["00", "22"]), 1, 1)
    with pytest.raises(PreconditionError):
        reduce_coordinate(HammingFamily(2, 0, 1, [True, True]), 1, 1)


def test_pullback_round_trips_through_reduction():
    G = frankl(2, 1, 0)
    H = sigma_pullback(G, (0, 0), 1, 4)
    out, chain, _ = reduce_full(H, 1, 1, chain=True)
    assert chain[-1] == chain[0] == F(1, 4)
    assert measure(out, F(1, 4)) == F(1, 4)


def test_binary_readout_order():
    H = HammingFamily.from_points(2, 0, 2, [(1, 0)])
    assert binary_to_set_family(H).sets() == [(1,)]


@pytest.mark.parametrize("args, best", [((3, 2, 1, 1), 3), ((4, 2, 1, 1), 4), ((4, 2, 1, 2), 8), ((2, 3, 2, 1), 2)])
def test_oracle_named_values(args, best):
    assert hamming_oracle(*args, count=False)[0] == best


def test_oracle_matches_closed_form_small():
    for m, n in ((2, 2), (3, 2), (5, 1), (2, 4)):
        for s in range(1, m // 2 + 1):
            for t in range(1, n + 1):
                got, _ = hamming_oracle(m, n, t, s, count=False)
                assert got == m**n * w_closed(n, t, F(s, m)).value


def test_oracle_witness_and_count():
    best, count, W = hamming_oracle(3, 2, 1, 1, witness=True)
    assert len(W) == best and is_t_agreeing_upto_s(W, 1, 1)
    assert count == len(hamming_enumerate_optimal(3, 2, 1, 1))


def test_oracle_caps():
    with pytest.raises(PreconditionError):
        hamming_oracle(11, 2, 1, 1)
    with pytest.raises(PreconditionError):
        hamming_oracle(4, 2, 3, 1)


def test_hamfam_round_trip():
    text = dumps_hamfam(EXOTIC)
    assert text.startswith("HAMFAM 1\nm=4\nn=2\nl=0\n0 0\n")
    assert loads_hamfam(text) == EXOTIC
    rng = np.random.default_rng(3)
    H = HammingFamily(3, 1, 2, rng.random(12) < 0.5)
    assert loads_hamfam(dumps_hamfam(H)) == H


@pytest.mark.parametrize(
    "text, lineno",
    [("HAMFAM 2\n", 1), ("HAMFAM 1\nm=3\nn=1\nq=0\n", 4), ("HAMFAM 1\nm=3\nn=1\nl=0\n3\n", 5),
     ("HAMFAM 1\nm=3\nn=1\nl=0\n1\n1\n", 6), ("HAMFAM 1\nm=3\nn=1\nl=0\n1 1\n", 5)],
)
def test_hamfam_errors(text, lineno):
    with pytest.raises(ParseError) as info:
        loads_hamfam(text)
    assert info.value.lineno == lineno


def test_random_agreeing_families_reduce_monotonically():
    rng = random.Random(11)
    for _ in range(30):
        m, n = rng.choice([(3, 2), (4, 2), (5, 2), (3, 3)])
        s = rng.randint(1, m // 2)
        t = rng.randint(1, n)
        pts = list(range(m**n))
        rng.shuffle(pts)
        Fm = HammingFamily(m, n, 0, [False] * m**n)
        for p in pts:
            ind = Fm.membership.copy()
            ind[p] = True
            cand = HammingFamily(m, n, 0, ind)
            if is_t_agreeing_upto_s(cand, t, s):
                Fm = cand
        G, chain, _ = reduce_full(Fm, t, s, chain=True)
        assert all(a <= b for a, b in zip(chain, chain[1:]))
        assert is_t_intersecting(G, t)
