"""One-sided max-linear systems ``A x = b``, optionally with ``x <= d``,
and the range of a max-linear functional over a one-equation solution set."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ShapeError
from .matrix import MpMatrix, mp_apply, require_finite, require_finite_vector, residual, vmin
from .outcome import Empty, Witness


@dataclass(frozen=True)
class PrincipalSolution:
    """``xbar = A# b`` and the row sets ``M_j = {i : xbar_j = b_i - a_ij}``.

    The solutions of ``A x = b`` are the ``x <= xbar`` whose tight columns
    (``x_j == xbar_j``) have ``M_j`` covering every row.
    """

    xbar: tuple[Fraction, ...]
    mj_sets: tuple[frozenset[int], ...]
    solvable: bool
    m: int

    @property
    def uncovered_rows(self) -> frozenset[int]:
        covered = frozenset().union(*self.mj_sets)
        return frozenset(range(self.m)) - covered

    def contains(self, x: Sequence) -> bool:
        x = require_finite_vector(x)
        if len(x) != len(self.xbar) or any(a > b for a, b in zip(x, self.xbar)):
            return False
        covered = set()
        for xj, bj, mj in zip(x, self.xbar, self.mj_sets):
            if xj == bj:
                covered |= mj
        return len(covered) == self.m


def _check_system(A: MpMatrix, b) -> tuple:
    require_finite(A)
    b = require_finite_vector(b, "right-hand side")
    if len(b) != A.m:
        raise ShapeError(f"right-hand side has length {len(b)}, matrix has {A.m} rows")
    return b


def solve_one_sided(A: MpMatrix, b: Sequence) -> PrincipalSolution:
    b = _check_system(A, b)
    xbar = residual(A, b)
    mj = tuple(
        frozenset(i for i in range(A.m) if b[i] - A[i, j] == xbar[j]) for j in range(A.n)
    )
    covered = frozenset().union(*mj)
    return PrincipalSolution(xbar, mj, len(covered) == A.m, A.m)


def solve_bounded(A: MpMatrix, b: Sequence, d: Sequence) -> Witness | Empty:
    """Find ``x <= d`` with ``A x = b``; ``z = min(d, xbar)`` is a solution if any exists."""
    b = _check_system(A, b)
    d = require_finite_vector(d, "bound")
    if len(d) != A.n:
        raise ShapeError(f"bound has length {len(d)}, matrix has {A.n} columns")
    z = vmin(d, residual(A, b))
    if mp_apply(A, z) == b:
        return Witness(z, b, "bounded-principal")
    return Empty("infeasible", "bounded-principal")


@dataclass(frozen=True)
class ClosedInterval:
    """``[lo, hi]`` over the rationals; ``lo is None`` marks the empty interval."""

    lo: Fraction | None
    hi: Fraction | None

    @classmethod
    def empty(cls) -> "ClosedInterval":
        return cls(None, None)

    @property
    def is_empty(self) -> bool:
        return self.lo is None or self.lo > self.hi

    def __contains__(self, value) -> bool:
        return not self.is_empty and self.lo <= value <= self.hi

    def integer_bounds(self) -> tuple[int, int] | None:
        """Smallest and largest integer in the interval, or ``None``."""
        import math

        if self.is_empty:
            return None
        lo, hi = math.ceil(self.lo), math.floor(self.hi)
        return (lo, hi) if lo <= hi else None

    def has_integer(self) -> bool:
        return self.integer_bounds() is not None


@dataclass(frozen=True)
class FunctionalRange:
    interval: ClosedInterval
    argmin: tuple | None
    argmax: tuple | None


def functional_range(a: Sequence, b, c: Sequence, d: Sequence | None = None) -> FunctionalRange:
    """Range of ``f(x) = max_j (c_j + x_j)`` over ``{x : max_j (a_j + x_j) = b, x <= d}``.

    Both endpoints come with a vector attaining them.
    """
    a = require_finite_vector(a)
    c = require_finite_vector(c)
    (b,) = require_finite_vector([b])
    n = len(a)
    if len(c) != n:
        raise ShapeError("a and c differ in length")
    xbar = tuple(b - aj for aj in a)
    if d is None:
        eligible = list(range(n))
        top = xbar
    else:
        d = require_finite_vector(d, "bound")
        if len(d) != n:
            raise ShapeError("bound length differs")
        eligible = [k for k in range(n) if xbar[k] <= d[k]]
        top = vmin(xbar, d)
    if not eligible:
        return FunctionalRange(ClosedInterval.empty(), None, None)
    hi = max(cj + tj for cj, tj in zip(c, top))
    k = min(eligible, key=lambda k: (c[k] + xbar[k], k))
    lo = c[k] + xbar[k]
    bottom = tuple(xbar[k] if j == k else min(lo - c[j], top[j]) for j in range(n))
    return FunctionalRange(ClosedInterval(lo, hi), bottom, top)
