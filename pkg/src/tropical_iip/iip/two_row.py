"""Integer images of two-row matrices, with and without side constraints."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import PreconditionError
from ..matrix import MpMatrix, mp_apply, require_finite, require_finite_vector, residual
from ..outcome import ALL_CHECKPOINTS_FAILED, BOX_EMPTY, INTERVAL_EMPTY, Empty, Witness
from ._kernel import p5_kernel, scale_matrix, unscale


@dataclass(frozen=True)
class TwoRowInterval:
    """``Im(A) = {y : alpha_lo <= y2 - y1 <= alpha_hi}``."""

    alpha_lo: Fraction
    alpha_hi: Fraction

    def integers(self) -> range:
        return range(math.ceil(self.alpha_lo), math.floor(self.alpha_hi) + 1)

    def __contains__(self, t) -> bool:
        return self.alpha_lo <= t <= self.alpha_hi


def _require_two_rows(A: MpMatrix) -> None:
    require_finite(A)
    if A.m != 2:
        raise PreconditionError(f"expected a 2-row matrix, got {A.m} rows")


def two_row_interval(A: MpMatrix) -> TwoRowInterval:
    _require_two_rows(A)
    diffs = [a2 - a1 for a1, a2 in zip(A.row(0), A.row(1))]
    return TwoRowInterval(min(diffs), max(diffs))


def two_row_iip(A: MpMatrix) -> Witness | Empty:
    iv = two_row_interval(A)
    t = math.ceil(iv.alpha_lo)
    if t > iv.alpha_hi:
        return Empty(INTERVAL_EMPTY, "two-row")
    y = (Fraction(0), Fraction(t))
    x = residual(A, y)
    return Witness(x, y, "two-row")


@dataclass(frozen=True)
class Segment:
    """Integer points ``(y1, y1 + alpha)`` for ``y1_lo <= y1 <= y1_hi``."""

    alpha: int
    y1_lo: int
    y1_hi: int

    def points(self):
        for y1 in range(self.y1_lo, self.y1_hi + 1):
            yield (y1, y1 + self.alpha)

    def __len__(self):
        return self.y1_hi - self.y1_lo + 1


def p4_describe(A: MpMatrix, L: Sequence, U: Sequence) -> list[Segment]:
    """Integer images of ``A`` inside the box ``L <= y <= U``, as line segments.

    An empty list means the box holds no integer image.
    """
    iv = two_row_interval(A)
    L = require_finite_vector(L, "lower bound")
    U = require_finite_vector(U, "upper bound")
    l1, l2 = (math.ceil(v) for v in L)
    u1, u2 = (math.floor(v) for v in U)
    segments = []
    for alpha in iv.integers():
        lo = max(l1, l2 - alpha)
        hi = min(u1, u2 - alpha)
        if lo <= hi:
            segments.append(Segment(alpha, lo, hi))
    return segments


def p5_solve(A: MpMatrix, L: Sequence) -> Witness | Empty:
    """Find ``x <= 0`` with ``A x`` integer and ``A x >= L``  (``A`` has 2 rows)."""
    _require_two_rows(A)
    L = require_finite_vector(L, "lower bound")
    if len(L) != 2:
        raise PreconditionError("the lower bound needs two components")
    upper = mp_apply(A, (Fraction(0),) * A.n)
    if any(math.ceil(l) > u for l, u in zip(L, upper)):
        return Empty(BOX_EMPTY, "p5")
    S, (Ls,), D = scale_matrix(A, L)
    found = p5_kernel(S, Ls, D)
    if found is None:
        return Empty(ALL_CHECKPOINTS_FAILED, "p5")
    z, _ = found
    x = unscale(z, D)
    return Witness(x, mp_apply(A, x), "p5")
