import math
import random
from fractions import Fraction

import pytest
from hypothesis import given

from tropical_iip import MpMatrix, PreconditionError, instances, mp_apply
from tropical_iip.iip.acu import round_down_uniform
from tropical_iip.scalar import frac

from conftest import rationals


@given(rationals(), rationals())
def test_fractional_part_of_sum(a, b):
    s = frac(a) + frac(b)
    if s < 1:
        assert frac(a + b) == s
    else:
        assert frac(a + b) == s - 1


@given(rationals(), rationals(), rationals())
def test_floor_shift_depends_only_on_fraction(a, k, y):
    b = a + math.floor(k)  # same fractional part as a
    assert frac(a) == frac(b)
    assert math.floor(a + y) - a == math.floor(b + y) - b


def test_round_down_uniform():
    rng = random.Random(6)
    for _ in range(200):
        H = instances.column_uniform(rng, rng.randint(1, 4), rng.randint(1, 5))
        w = [instances.rational(rng) for _ in range(H.n)]
        wt = round_down_uniform(H, w)
        for j in range(H.n):
            assert len({math.floor(H[i, j] + w[j]) - H[i, j] for i in range(H.m)}) == 1
        assert all(a <= b for a, b in zip(wt, w))
        assert mp_apply(H, wt) == tuple(Fraction(math.floor(v)) for v in mp_apply(H, w))


def test_round_down_zero_is_minus_fraction():
    H = MpMatrix([["1.2", "0.5"], ["3.2", "-1.5"]])
    assert round_down_uniform(H, [0, 0]) == (Fraction(-1, 5), Fraction(-1, 2))


def test_round_down_needs_uniform():
    with pytest.raises(PreconditionError):
        round_down_uniform(MpMatrix([["0.1"], ["0.2"]]), [0])
