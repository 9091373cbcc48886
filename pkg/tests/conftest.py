from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from tropical_iip import MpMatrix

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")


def rationals(max_num=40, max_den=10):
    return st.builds(
        Fraction,
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )


@st.composite
def finite_matrices(draw, m=None, n=None, max_dim=4, elements=None):
    m = draw(st.integers(1, max_dim)) if m is None else m
    n = draw(st.integers(1, max_dim)) if n is None else n
    elements = rationals() if elements is None else elements
    rows = draw(st.lists(st.lists(elements, min_size=n, max_size=n), min_size=m, max_size=m))
    return MpMatrix(rows)


def vectors(n, elements=None):
    return st.lists(rationals() if elements is None else elements, min_size=n, max_size=n).map(tuple)


def F(*values):
    """Shorthand: ``F("1/2", 3)`` -> tuple of Fractions."""
    return tuple(Fraction(v) for v in values)


@pytest.fixture
def M():
    return lambda rows: MpMatrix(rows)
