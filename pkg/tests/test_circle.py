from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from akx.circle import (
    ZmSet,
    agree_window,
    is_cross_s_agreeing,
    is_interval,
    is_s_agreeing,
    neighbourhood,
    verify_katona_cross,
)
from akx.family import PreconditionError


def test_zmset():
    A = ZmSet.of(5, [0, 7])
    assert A.residues == (0, 2) and len(A) == 2
    with pytest.raises(PreconditionError):
        ZmSet(3, 0b1000)


def test_agree_window_wraps():
    assert ZmSet(6, agree_window(6, 2, 0)).residues == (0, 1, 5)


def test_agreement():
    assert is_s_agreeing(ZmSet.of(7, [2, 3, 4]), 3)
    assert not is_s_agreeing(ZmSet.of(7, [0, 3]), 3)
    assert is_cross_s_agreeing(ZmSet.of(8, [0]), ZmSet.of(8, [7, 1]), 2)
    with pytest.raises(PreconditionError):
        is_s_agreeing(ZmSet.of(4, [0]), 3)


@pytest.mark.parametrize(
    "m, res, center",
    [(7, [3, 4, 5], Fraction(4)), (7, [3, 4], Fraction(7, 2)), (5, [4, 0], Fraction(9, 2)),
     (5, [0, 2], None), (5, [], None), (3, [0, 1, 2], None)],
)
def test_interval_center(m, res, center):
    assert is_interval(ZmSet.of(m, res)) == center


@given(st.integers(2, 9), st.data())
def test_neighbourhood_is_largest_partner(m, data):
    s = data.draw(st.integers(1, m // 2))
    A = ZmSet(m, data.draw(st.integers(0, (1 << m) - 1)))
    B = ZmSet(m, data.draw(st.integers(0, (1 << m) - 1)))
    assert is_cross_s_agreeing(A, B, s) == ((B.mask & ~neighbourhood(A, s)) == 0)


def test_cross_agreeing_half_case_lines():
    rep = verify_katona_cross(4, 2)
    assert rep.ok and rep.max_sum == 4
    # with s = m/2 the partner of {0,1} is its shift by 2, complemented
    assert "2 2 0x3 0x3 -" in rep.lines()


def test_cross_agreeing_small_cases():
    for m in range(2, 10):
        for s in range(1, m // 2 + 1):
            rep = verify_katona_cross(m, s)
            assert rep.ok, rep.failures
            assert rep.max_self == s


def test_cross_agreeing_equality_pairs_are_cocentered():
    rep = verify_katona_cross(7, 2)
    assert rep.equality_pairs
    for a, b, c in rep.equality_pairs:
        assert c is not None and is_interval(ZmSet(7, b)) == c


def test_cross_agreeing_cap():
    with pytest.raises(PreconditionError):
        verify_katona_cross(15, 2)
