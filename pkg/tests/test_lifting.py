from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from akx.family import PreconditionError, SetFamily, frankl
from akx.lifting import (
    convergence_probe,
    falling,
    folded_measure,
    level_sum,
    level_sum_identity,
    lifted_count,
    lifted_measure,
    uniform_frankl_count,
)
from strategies import families, probabilities


@pytest.mark.parametrize("args, value", [((5, 2, 1, 0), 4), ((5, 3, 2, 1), 4), ((6, 3, 1, 1), 10)])
def test_uniform_frankl_count(args, value):
    assert uniform_frankl_count(*args) == value


def test_uniform_frankl_count_ranges():
    with pytest.raises(PreconditionError):
        uniform_frankl_count(3, 2, 2, 1)
    assert uniform_frankl_count(6, 1, 2, 0) == 0


def test_falling():
    assert falling(5, 2) == 20 and falling(3, 0) == 1 and falling(2, 3) == 0


def test_lifted_measure_examples():
    assert lifted_measure(SetFamily.full(3), 7, 2) == 1
    assert lifted_measure(SetFamily.from_sets(1, [()]), 4, 1) == Fraction(3, 4)
    with pytest.raises(PreconditionError):
        lifted_measure(SetFamily.full(3), 2, 1)


@given(st.integers(1, 3), st.integers(0, 2), st.integers(0, 12), st.data())
def test_lifted_frankl_is_uniform_count(t, r, extra, data):
    n = t + 2 * r + extra
    k = data.draw(st.integers(0, n))
    H = frankl(t + 2 * r, t, r)
    assert lifted_measure(H, n, k) == Fraction(uniform_frankl_count(n, k, t, r), comb(n, k))


@given(families(max_n=4), st.integers(0, 6), st.data())
def test_lifted_measure_is_count_quotient(H, extra, data):
    n = H.n + extra
    k = data.draw(st.integers(0, n))
    assert lifted_measure(H, n, k) == Fraction(lifted_count(H, n, k), comb(n, k))


def test_probe_decreases():
    gaps = [g for _, g in convergence_probe(frankl(2, 2, 0), Fraction(1, 4), [8, 16, 32, 64, 128])]
    assert all(a > b for a, b in zip(gaps, gaps[1:]))


def test_probe_full_family_is_exact():
    assert all(g == 0 for _, g in convergence_probe(SetFamily.full(2), Fraction(1, 3), [5, 10]))


def test_probe_tracks_tie_value():
    (_, gap), = convergence_probe(frankl(4, 2, 1), Fraction(1, 3), [3000])
    assert gap < Fraction(1, 500)


@given(families(max_n=6), probabilities)
def test_level_sum_identity(F, p):
    assert level_sum_identity(F, p)


def test_level_sum_values():
    assert level_sum(frankl(4, 2, 1), Fraction(1, 3)) == folded_measure(frankl(4, 2, 1), Fraction(1, 3)) == Fraction(1, 9)
    assert level_sum(SetFamily.empty(3), Fraction(1, 2)) == 0
