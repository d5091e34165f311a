from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from akx.family import PreconditionError, SetFamily, frankl, is_t_intersecting, measure
from akx.shifting import (
    format_trace,
    is_fully_stable,
    is_left_compressed,
    is_stable,
    left_compress,
    min_pair_size_sum,
    potential,
    shift_AB,
    shift_ij,
    stabilize,
)
from strategies import families, intersecting_families, probabilities


def test_shift_moves_unless_blocked():
    F = SetFamily.from_sets(3, [(2,), (1,), (2, 3)])
    G = shift_ij(F, 2, 1)
    # {2} is blocked by {1}; {2,3} becomes {1,3}
    assert G.sets() == [(1,), (2,), (1, 3)]


def test_shift_validates_points():
    F = frankl(3, 1, 0)
    with pytest.raises(PreconditionError):
        shift_ij(F, 1, 1)
    with pytest.raises(PreconditionError):
        shift_ij(F, 0, 2)
    with pytest.raises(PreconditionError):
        shift_AB(F, {1, 2}, {2})


@given(families(min_n=2, max_n=6), probabilities, st.data())
def test_shift_preserves_measure(F, p, data):
    i, j = data.draw(st.permutations(range(1, F.n + 1)))[:2]
    assert measure(shift_ij(F, i, j), p) == measure(F, p)


@given(intersecting_families(min_n=2), st.data())
def test_shift_preserves_intersection(Ft, data):
    F, t = Ft
    i, j = data.draw(st.permutations(range(1, F.n + 1)))[:2]
    assert is_t_intersecting(shift_ij(F, i, j), t)


@given(families(min_n=1, max_n=6))
@settings(max_examples=60)
def test_left_compress_fixpoint(F):
    G, trace = left_compress(F)
    assert is_left_compressed(G)
    assert G.level_counts() == F.level_counts()
    assert potential(G) <= potential(F)
    replay = F
    for i, j in trace:
        replay = shift_ij(replay, i, j)
    assert replay == G


def test_star_on_three_compresses_in_one_shift():
    G, trace = left_compress(SetFamily.from_sets(3, [(3,), (1, 3), (2, 3), (1, 2, 3)]))
    assert G == frankl(3, 1, 0)
    assert trace == [(3, 1)]
    assert format_trace(trace) == "3 1\n"


def test_frankl_already_compressed():
    F = frankl(6, 2, 1)
    assert left_compress(F) == (F, [])


def test_stability_predicates():
    F = frankl(3, 1, 1)
    assert is_stable(F, 0) and is_stable(F, 1)
    assert is_stable(frankl(3, 1, 0), 0)  # monotone families are (0,1)-stable
    assert not is_stable(SetFamily.from_sets(3, [(1,)]), 0)
    assert is_fully_stable(SetFamily.full(3)) and is_fully_stable(SetFamily.empty(3))


@given(intersecting_families(min_n=1, max_n=7))
@settings(max_examples=60)
def test_stabilize_outputs_heavy_sizes(Ft):
    F, t = Ft
    if not F:
        return
    G, steps = stabilize(F, t, trace=True)
    assert is_t_intersecting(G, t)
    assert is_fully_stable(G)
    assert len(G) == len(F)
    assert min_pair_size_sum(G) >= F.n + t - 1


def test_stabilize_rejects_non_intersecting_input():
    with pytest.raises(PreconditionError):
        stabilize(SetFamily.from_sets(3, [(1,), (2,)]), 1)


def test_stabilize_grows_small_members_first():
    G, steps = stabilize(SetFamily.from_sets(3, [(3,)]), 1, trace=True)
    assert G.sets() == [(1, 2, 3)]
    assert [a for a, _ in steps] == [0, 0]
    assert measure(G, Fraction(2, 3)) > measure(SetFamily.from_sets(3, [(3,)]), Fraction(2, 3))
