import random
from fractions import Fraction

import pytest

from tropical_iip import BudgetExceededError, MpMatrix, instances, mp_apply
from tropical_iip.iip import iip_solve
from tropical_iip.oracle import (
    elementary_cycles,
    iip_box,
    oracle_cycle_mean,
    oracle_iip,
    oracle_integer_eigen,
    oracle_permanent,
)

from conftest import F


def test_two_row_box():
    A = MpMatrix([["1/2", "1/5"], ["3/10", "9/10"]])
    assert iip_box(A) == [(0, 0), (0, 0)]
    out = oracle_iip(A)
    assert out.y == F(0, 0)
    assert mp_apply(A, out.x) == out.y


def test_empty_box():
    A = MpMatrix([["3/10"], ["3/5"]])
    assert iip_box(A) == [(0, 0), (1, 0)]
    out = oracle_iip(A)
    assert not out and out.reason == "box-empty"


def test_integer_matrix():
    A = MpMatrix([[1, 2], [3, -4]])
    out = oracle_iip(A)
    assert out.y[0] == 0
    assert mp_apply(A, out.x) == out.y


def test_budget():
    A = MpMatrix([[0, 0], [-50, 50], [-50, 50]])
    with pytest.raises(BudgetExceededError):
        oracle_iip(A, budget=100)


def test_big_entries_use_exact_ints():
    big = Fraction(3 * 10**30 + 1, 2)
    A = MpMatrix([[big, 0], [big + Fraction(1, 2), 1]])
    out = oracle_iip(A)
    assert mp_apply(A, out.x) == out.y
    assert all(v.denominator == 1 for v in out.y)


def test_integer_eigen_boxes():
    assert oracle_integer_eigen(MpMatrix([[0, "-0.5"], ["-0.3", 0]])) == F(0, 0)
    assert oracle_integer_eigen(MpMatrix([[0, "-0.5"], ["0.3", 0]])) is None


def test_integer_eigen_integer_matrix():
    A = MpMatrix([[0, -1, -3], [-2, 0, -1], [0, -4, 0]])
    x = oracle_integer_eigen(A)
    assert x is not None and mp_apply(A, x) == x


def test_cycle_mean_and_permanent_small():
    assert oracle_cycle_mean(MpMatrix([[0, 2], [-1, 0]])) == Fraction(1, 2)
    assert sorted(elementary_cycles(MpMatrix([[0, 2], [-1, 0]]))) == [(0, 0), (0, 1, 0), (1, 1)]
    assert oracle_permanent(MpMatrix([[5]])) == (5, 1)
    assert oracle_cycle_mean(MpMatrix([[5]])) == 5


def test_solver_witnesses_lie_in_box():
    rng = random.Random(99)
    for _ in range(1000):
        A = instances.matrix(rng, rng.randint(1, 4), rng.randint(1, 4), 10, 6)
        try:
            out = iip_solve(A, budget=10**5)
        except Exception:
            continue
        if not out:
            continue
        y = [v - out.y[0] for v in out.y]
        for (lo, hi), v in zip(iip_box(A), y):
            assert lo <= v <= hi
