from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from akx.closed_form import (
    REGIMES,
    breakpoint,
    compare_frankl,
    curve_points,
    curve_rows,
    curve_breakpoints,
    mu_frankl,
    parse_p,
    r_star,
    w_closed,
    window,
    wsup_closed,
)
from akx.family import PreconditionError, frankl, measure
from strategies import probabilities

F = Fraction


def test_breakpoints():
    assert breakpoint(2, 0) == F(1, 3)
    assert breakpoint(1, 3) == F(1, 2)
    assert window(2, 1) == (F(1, 3), F(2, 5))
    assert window(1, 0) == (0, F(1, 2))


def test_mu_frankl_tie_at_breakpoint():
    assert mu_frankl(2, 0, F(1, 3)) == mu_frankl(2, 1, F(1, 3)) == F(1, 9)


@given(st.integers(1, 4), st.integers(0, 3), probabilities)
def test_mu_frankl_is_family_measure(t, r, p):
    assert mu_frankl(t, r, p) == measure(frankl(t + 2 * r, t, r), p)


@given(st.integers(1, 6), st.integers(0, 6), probabilities)
def test_compare_sign_follows_breakpoint(t, r, p):
    cut = breakpoint(t, r)
    assert compare_frankl(t, r, p) == (p < cut) - (p > cut)


@pytest.mark.parametrize(
    "n, t, p, value, rs, regime",
    [
        (4, 2, F(3, 10), F(9, 100), {0}, "frankl-unique"),
        (3, 1, F(1, 4), F(1, 4), {0}, "t1-psmall"),
        (5, 1, F(1, 2), F(1, 2), {0, 1, 2}, "t1-phalf-many"),
        (4, 2, F(1, 3), F(1, 9), {0, 1}, "frankl-two"),
        (3, 2, F(1, 2), F(1, 4), {0}, "phalf"),
        (4, 1, F(3, 4), F(27, 32), {1}, "t1-plarge-even"),
        (3, 1, F(3, 4), F(27, 32), {1}, "t1-plarge-odd"),
    ],
)
def test_w_closed_cases(n, t, p, value, rs, regime):
    res = w_closed(n, t, p)
    assert res.value == value
    assert res.optimal_r == frozenset(rs)
    assert res.regime == regime
    assert regime in REGIMES


def test_breakpoint_needs_both_families_to_fit():
    # at n=3 only F_{2,0} fits, so p_{2,0} is not a tie
    assert w_closed(3, 2, F(1, 3)).optimal_r == frozenset({0})


def test_w_closed_rejects_bad_parameters():
    with pytest.raises(PreconditionError):
        w_closed(2, 3, F(1, 2))
    with pytest.raises(PreconditionError):
        w_closed(3, 1, F(0))


@given(st.integers(1, 12), st.integers(1, 6), probabilities)
def test_w_closed_attained_by_a_frankl_family(n, t, p):
    if t > n:
        return
    res = w_closed(n, t, p)
    for r in res.optimal_r:
        assert mu_frankl(t, r, p) == res.value
    assert res.value == max(mu_frankl(t, r, p) for r in range(r_star(n, t) + 1))


@given(st.integers(1, 6), probabilities)
def test_wsup_bounds_every_n(t, p):
    sup = wsup_closed(t, p)
    assert all(w_closed(n, t, p).value <= sup for n in range(t, t + 12))


def test_wsup_values():
    assert wsup_closed(1, F(1, 3)) == F(1, 3)
    assert wsup_closed(3, F(1, 2)) == F(1, 2)
    assert wsup_closed(2, F(2, 3)) == 1


def test_curve_breakpoints_are_lower_window_ends():
    assert curve_breakpoints(20, 2) == [F(r, 2 * r + 1) for r in range(1, 10)]
    assert set(curve_breakpoints(20, 1)) == {F(1, 2)}


def test_curve_points_unique_and_sorted():
    pts = curve_points(20, 1, 10)
    assert pts == sorted(set(pts))
    assert pts.count(F(1, 2)) == 1


def test_curve_rows_monotone_per_t():
    rows = curve_rows(10, 3, 40)
    for t in (1, 2, 3):
        ws = [r.w.value for r in rows if r.t == t]
        assert ws == sorted(ws)


def test_curve_row_fields():
    row = next(r for r in curve_rows(20, 1, 4) if r.p == F(1, 4))
    assert row.fields()[:6] == [1, 1, 4, 1, 4, "0"]


def test_parse_p():
    assert parse_p("2/6") == F(1, 3)
    for bad in ("0.3", "1/1", "0"):
        with pytest.raises((ValueError, PreconditionError)):
            parse_p(bad)
