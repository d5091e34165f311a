from fractions import Fraction

import pytest

from akx.closed_form import w_closed
from akx.family import PreconditionError, frankl, frankl_equivalence_witness, is_t_intersecting, measure
from akx.oracle import (
    enumerate_optimal,
    max_uniform_t_intersecting,
    max_weight_clique,
    max_weight_t_intersecting,
    thread_count,
)

F = Fraction


def test_clique_basics():
    # triangle plus a pendant vertex
    adj = [0b0110, 0b0101, 0b0011, 0b0000]
    res = max_weight_clique(adj, [1, 1, 1, 5], collect=True)
    assert (res.best, res.count) == (5, 1)
    res = max_weight_clique(adj, [1, 1, 1, 1], collect=True)
    assert (res.best, res.count, res.cliques) == (3, 1, (0b0111,))


def test_clique_rejects_non_positive_weights():
    with pytest.raises(PreconditionError):
        max_weight_clique([0], [0])


def test_empty_graph():
    assert max_weight_clique([], []).best == 0


@pytest.mark.parametrize(
    "n, t, p, value, count",
    [
        (4, 1, F(3, 4), F(27, 32), 8),
        (3, 1, F(1, 4), F(1, 4), 3),
        (4, 2, F(1, 3), F(1, 9), 6 + 1),
    ],
)
def test_weighted_values(n, t, p, value, count):
    assert max_weight_t_intersecting(n, t, p) == (value, count)


def test_weighted_matches_closed_form_small():
    for n in range(1, 5):
        for t in range(1, n + 1):
            for p in (F(1, 7), F(2, 5), F(1, 2), F(5, 8)):
                assert max_weight_t_intersecting(n, t, p, count=False)[0] == w_closed(n, t, p).value


def test_enumerate_optimal_stars():
    fams = enumerate_optimal(3, 1, F(1, 4))
    assert len(fams) == 3
    assert all(frankl_equivalence_witness(G, 1, 0) for G in fams)
    assert fams == sorted(fams, key=lambda G: G.indicator_int)


def test_enumerated_families_are_optimal():
    p = F(3, 4)
    for G in enumerate_optimal(2, 1, p):
        assert is_t_intersecting(G, 1) and measure(G, p) == F(3, 4)


def test_caps():
    with pytest.raises(PreconditionError):
        max_weight_t_intersecting(7, 1, F(1, 2))
    with pytest.raises(PreconditionError):
        enumerate_optimal(6, 1, F(1, 2))
    with pytest.raises(PreconditionError):
        max_uniform_t_intersecting(8, 4, 1)


@pytest.mark.parametrize(
    "n, k, t, best, count",
    [(5, 3, 2, 4, 5), (5, 2, 1, 4, 5), (4, 2, 2, 1, 6), (4, 1, 2, 0, 1)],
)
def test_uniform(n, k, t, best, count):
    assert max_uniform_t_intersecting(n, k, t) == (best, count)


def test_uniform_collect():
    best, count, fams = max_uniform_t_intersecting(5, 2, 1, collect=True)
    assert len(fams) == count
    assert all(len(G) == best for G in fams)


def test_thread_count_env(monkeypatch):
    monkeypatch.setenv("AKX_THREADS", "3")
    assert thread_count() == 3
    assert thread_count(0) == 1


def test_frankl_family_is_feasible():
    assert is_t_intersecting(frankl(5, 2, 1), 2)
