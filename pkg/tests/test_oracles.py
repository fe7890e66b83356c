import itertools
import random

import pytest
from hypothesis import given, strategies as st

from hkdet.budget import BudgetExceeded
from hkdet.counting import INF, CountQuery, count, hilbert_kunz
from hkdet.oracles import (
    alpha,
    alpha_bounded,
    battery_queries,
    brute_battery,
    brute_count,
    is_staircase,
    satisfies_row_or_col,
    segre_battery,
    segre_length,
)


def test_is_staircase_examples():
    assert not is_staircase([[1, 0], [0, 1]])
    assert is_staircase([[0, 1], [1, 0]])
    assert is_staircase([[0, 0, 0], [0, 0, 0]])


def test_satisfies_row_or_col_examples():
    assert satisfies_row_or_col([[1, 1], [0, 0]], 2)
    assert not satisfies_row_or_col([[1, 1], [1, 1]], 2)
    assert satisfies_row_or_col([[0, 0], [0, 0]], 1)


def test_brute_examples():
    assert brute_count(CountQuery.unbounded(2, 2, 2)) == 10
    assert brute_count(CountQuery(2, 2, 2, (1, 1), (1, 1))) == 6
    assert brute_count(CountQuery.unbounded(1, 2, 3)) == 9


def test_brute_refuses_large_instances():
    with pytest.raises(BudgetExceeded):
        brute_count(CountQuery.unbounded(5, 5, 5))
    with pytest.raises(BudgetExceeded):
        brute_count(CountQuery.unbounded(2, 2, 3), state_budget=80)


def test_brute_budget_env_override(monkeypatch):
    monkeypatch.setenv("HK_ENUM_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        brute_count(CountQuery.unbounded(2, 2, 2))


def test_alpha_examples():
    assert alpha(2, 3) == 4
    assert alpha(1, 7) == 1
    assert alpha(3, 0) == 1


def bounded_vectors(m, d, q):
    return sum(1 for v in itertools.product(range(q), repeat=m) if sum(v) == d)


def test_alpha_bounded_examples():
    assert bounded_vectors(2, 2, 2) == 1 == alpha_bounded(2, 2, 2)
    assert bounded_vectors(2, 1, 2) == 2 == alpha_bounded(2, 1, 2)
    assert alpha_bounded(2, 3, 2) == 0


@given(st.integers(1, 4), st.integers(0, 14), st.integers(1, 5))
def test_alpha_bounded_matches_enumeration(m, d, q):
    assert alpha_bounded(m, d, q) == bounded_vectors(m, d, q)


@given(st.integers(1, 6), st.integers(1, 8), st.data())
def test_alpha_bounded_equals_alpha_below_q(m, q, data):
    d = data.draw(st.integers(0, q - 1))
    assert alpha_bounded(m, d, q) == alpha(m, d)


@given(st.integers(1, 6), st.integers(1, 8))
def test_alpha_bounded_total_is_q_to_the_m(m, q):
    assert sum(alpha_bounded(m, d, q) for d in range(m * (q - 1) + 1)) == q**m


def test_segre_examples():
    first = sum(alpha(2, d) * alpha_bounded(2, d, 2) for d in range(3))
    both = sum(alpha_bounded(2, d, 2) ** 2 for d in range(3))
    assert (first, both) == (8, 6)
    assert segre_length(2, 2, 2) == 10
    assert segre_length(1, 1, 5) == 5
    assert segre_length(2, 3, 2) == 23


def test_segre_limits_are_asymmetric():
    # (2,4,3): first sum runs to d = 8, the others to d = 4.
    assert segre_length(2, 4, 3) == segre_length(4, 2, 3) == hilbert_kunz(2, 4, 3)


def test_brute_matches_naive(naive):
    rng = random.Random(3)
    for m in range(1, 3):
        for n in range(1, 4):
            for q in range(1, 4):
                for query in battery_queries(m, n, q, rng, n_random=5):
                    assert brute_count(query) == naive(m, n, q, query.rows, query.cols)


def test_battery_shape():
    qs = battery_queries(2, 3, 3, random.Random(0), n_random=50)
    # 2 fixed patterns + 3 values * 5 lines + 50 random
    assert len(qs) == 2 + 3 * 5 + 50
    assert qs[0] == CountQuery.unbounded(2, 3, 3)
    assert qs[1].rows == (2, 2) and qs[1].cols == (2, 2, 2)


def test_brute_battery_grid():
    result = brute_battery(3, 4, seed=7)
    assert result.checked > 0
    assert result.passed, result.mismatches[:3]


def test_segre_battery_grid():
    result = segre_battery(4, 8)
    assert result.checked == 4 * 4 * 8
    assert result.passed, result.mismatches[:3]


def test_battery_budget_guard():
    with pytest.raises(BudgetExceeded):
        brute_battery(9, 9)


@given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 4), st.randoms(use_true_random=False))
def test_count_equals_brute_random(m, n, q, rng):
    choices = list(range(q)) + [INF]
    rows = tuple(rng.choice(choices) for _ in range(m))
    cols = tuple(rng.choice(choices) for _ in range(n))
    query = CountQuery(m, n, q, rows, cols)
    assert count(query) == brute_count(query)
