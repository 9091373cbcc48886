"""Extended rationals: exact ``Fraction`` values plus the bottom element ``EPS``.

``EPS`` stands for minus infinity.  It compares below every number, is
absorbing for ``+`` (max-plus multiplication) and neutral for ``max``
(max-plus addition), so plain Python ``max`` and ``+`` implement the
semiring directly on mixed sequences.
"""

from __future__ import annotations

import math
from decimal import Decimal
from fractions import Fraction
from functools import total_ordering
from typing import Union


@total_ordering
class _Epsilon:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EPS"

    def __str__(self):
        return "*"

    def __reduce__(self):
        return (_Epsilon, ())

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("max-plus epsilon")

    def __lt__(self, other):
        if other is self:
            return False
        if isinstance(other, (int, Fraction)):
            return True
        return NotImplemented

    def __add__(self, other):
        if other is self or isinstance(other, (int, Fraction)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        raise ArithmeticError("-EPS (plus infinity) is not representable")

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self
        return NotImplemented


EPS = _Epsilon()

ExtScalar = Union[Fraction, _Epsilon]


def is_eps(a) -> bool:
    return a is EPS


def to_scalar(value) -> ExtScalar:
    """Convert ``value`` to a canonical extended scalar.

    Accepts ints, Fractions, Decimals, strings (``"p/q"``, integers, decimal
    literals, ``"*"`` for epsilon) and ``EPS``.  Floats are refused: a float
    has already lost the exact value the caller meant.
    """
    if value is EPS:
        return EPS
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Decimal)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if text == "*":
            return EPS
        return Fraction(text)
    if isinstance(value, float):
        raise TypeError(f"float {value!r} is inexact; pass a string or Fraction")
    raise TypeError(f"cannot convert {type(value).__name__} to a scalar")


def oplus(a: ExtScalar, b: ExtScalar) -> ExtScalar:
    return a if a >= b else b


def otimes(a: ExtScalar, b: ExtScalar) -> ExtScalar:
    return a + b


def floor(a: Fraction) -> int:
    return math.floor(a)


def ceil(a: Fraction) -> int:
    return math.ceil(a)


def frac(a: Fraction) -> Fraction:
    """Fractional part ``a - floor(a)``, always in ``[0, 1)``."""
    return a - math.floor(a)


def is_integer(a: ExtScalar) -> bool:
    return a is not EPS and a.denominator == 1


def format_scalar(a: ExtScalar) -> str:
    if a is EPS:
        return "*"
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"
