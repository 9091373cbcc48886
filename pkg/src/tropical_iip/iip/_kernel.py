"""Exact integer kernel for the IIP solvers.

Every finite rational entry is multiplied by the common denominator ``D`` of
the instance, so a value ``v`` in an array represents ``v / D``.  Integrality
becomes divisibility by ``D`` and the fractional part is ``v % D``.  Arrays
are ``int64`` when the magnitudes leave ample headroom and Python-int object
arrays otherwise, so results are exact either way.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..matrix import MpMatrix, require_finite

_INT64_SAFE = 2**55


def common_denominator(values) -> int:
    return math.lcm(1, *(v.denominator for v in values))


def _dtype_for(data) -> type:
    biggest = max((abs(v) for row in data for v in row), default=0)
    return np.int64 if biggest < _INT64_SAFE else object


def scale(rows: Sequence[Sequence[Fraction]], D: int) -> np.ndarray:
    data = [[v.numerator * (D // v.denominator) for v in row] for row in rows]
    return np.array(data, dtype=_dtype_for(data))


def scale_matrix(A: MpMatrix, *extra: Sequence[Fraction]) -> tuple[np.ndarray, list[np.ndarray], int]:
    """Scale ``A`` and extra vectors by one shared denominator."""
    require_finite(A)
    D = common_denominator([*A.entries(), *(v for vec in extra for v in vec)])
    data = [[v.numerator * (D // v.denominator) for v in row] for row in A.rows]
    vecs = [[v.numerator * (D // v.denominator) for v in vec] for vec in extra]
    dtype = _dtype_for(data + vecs)
    return np.array(data, dtype=dtype), [np.array(v, dtype=dtype) for v in vecs], D


def unscale(values, D: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(int(v), D) for v in values)


def ceil_to_int(v, D: int):
    """Scaled ``ceil(v / D)``, still in scaled units."""
    return -((-v) // D) * D


def floor_to_int(v, D: int):
    return (v // D) * D


def p5_checkpoints(l1, l2, du, alo, ahi, D) -> list[tuple]:
    """Candidate points for Case 1 (``u2 - u1 >= l2 - l1``)."""
    if du < alo:
        return [(l1, l1 + alo)]
    if du > ahi:
        if l1 + ahi < l2:
            return [(l2 - ahi, l2)]
        return [(l1, l1 + ahi)]
    lo, hi = floor_to_int(du, D), ceil_to_int(du, D)
    return [(l1, l1 + lo)] if lo == hi else [(l1, l1 + lo), (l1, l1 + hi)]


def p5_kernel(B: np.ndarray, L, D: int):
    """Find ``z <= 0`` with ``B z`` integer and ``>= L``.

    ``B`` is ``2 x n`` and ``L`` a length-2 array, both scaled by ``D``.
    Returns ``(z, y)`` or ``None``; O(n).
    """
    if B.shape[1] == 0:
        return None
    l1, l2 = ceil_to_int(L[0], D), ceil_to_int(L[1], D)
    U = B.max(axis=1)
    u1, u2 = U[0], U[1]
    if l1 > u1 or l2 > u2:
        return None
    diff = B[1] - B[0]
    alo, ahi = diff.min(), diff.max()
    du = u2 - u1
    if du >= l2 - l1:
        points = p5_checkpoints(l1, l2, du, alo, ahi, D)
    else:
        mirrored = p5_checkpoints(l2, l1, -du, -ahi, -alo, D)
        points = [(b, a) for a, b in mirrored]
    for y1, y2 in points:
        if not (l1 <= y1 <= u1 and l2 <= y2 <= u2):
            continue
        if y1 % D or y2 % D:
            continue
        xbar = np.minimum(y1 - B[0], y2 - B[1])
        z = np.minimum(xbar, 0)
        image = (B + z).max(axis=1)
        if image[0] == y1 and image[1] == y2:
            return z, (y1, y2)
    return None


def residues(S: np.ndarray, D: int) -> np.ndarray:
    return S % D
