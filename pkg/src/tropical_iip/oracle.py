"""Brute-force ground truth for desk-scale instances.

Nothing here shares code with the solvers beyond the basic max-plus
product: each answer comes from exhaustive enumeration over a finite box
that provably contains a representative of every solution.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BudgetExceededError, PreconditionError, ShapeError
from .matrix import MpMatrix, mp_apply, require_finite
from .outcome import BOX_EMPTY, ORACLE_EXHAUSTED, Empty, Witness
from .scalar import EPS

DEFAULT_BUDGET = 10**7
_CHUNK = 50_000


@dataclass(frozen=True)
class OracleBudget:
    max_candidates: int = DEFAULT_BUDGET


def _as_int_array(A: MpMatrix) -> tuple[np.ndarray, int]:
    D = math.lcm(1, *(a.denominator for a in A.entries()))
    data = [[a.numerator * (D // a.denominator) for a in row] for row in A.rows]
    big = max(abs(v) for row in data for v in row)
    return np.array(data, dtype=np.int64 if big < 2**55 else object), D


def _budget(budget) -> int:
    if budget is None:
        return DEFAULT_BUDGET
    if isinstance(budget, OracleBudget):
        return budget.max_candidates
    return int(budget)


def iip_box(A: MpMatrix) -> list[tuple[int, int]]:
    """Integer range of ``y_i - y_1`` for every row (the first is ``(0, 0)``)."""
    require_finite(A)
    box = [(0, 0)]
    for i in range(1, A.m):
        diffs = [a - b for a, b in zip(A.row(i), A.row(0))]
        box.append((math.ceil(min(diffs)), math.floor(max(diffs))))
    return box


def box_size(box: list[tuple[int, int]]) -> int:
    return math.prod(max(0, hi - lo + 1) for lo, hi in box)


def _grid_chunks(box, D):
    ranges = [range(lo, hi + 1) for lo, hi in box]
    it = itertools.product(*ranges)
    while True:
        chunk = list(itertools.islice(it, _CHUNK))
        if not chunk:
            return
        yield np.array(chunk, dtype=np.int64) * D


def oracle_iip(A: MpMatrix, budget=None) -> Witness | Empty:
    """First (lexicographic) integer image with ``y_1 = 0``, by enumeration.

    Candidate ``y`` is accepted iff ``A (A# y) == y``.
    """
    box = iip_box(A)
    size = box_size(box)
    if size == 0:
        return Empty(BOX_EMPTY, "oracle")
    limit = _budget(budget)
    if size > limit:
        raise BudgetExceededError(f"{size} candidates exceed the budget of {limit}")
    S, D = _as_int_array(A)
    if S.dtype == object:
        chunks = (c.astype(object) for c in _grid_chunks(box, D))
    else:
        chunks = _grid_chunks(box, D)
    for Y in chunks:
        # xbar[k, j] = min_i (Y[k, i] - a_ij)
        xbar = (Y[:, :, None] - S[None, :, :]).min(axis=1)
        image = (S[None, :, :] + xbar[:, None, :]).max(axis=2)
        hits = np.flatnonzero((image == Y).all(axis=1))
        if hits.size:
            k = int(hits[0])
            x = tuple(Fraction(int(v), D) for v in xbar[k])
            y = tuple(Fraction(int(v), D) for v in Y[k])
            return Witness(x, y, "oracle")
    return Empty(ORACLE_EXHAUSTED, "oracle")


def oracle_integer_eigen(A: MpMatrix, budget=None) -> tuple | None:
    """An integer eigenvector ``x`` (``A x = x``, ``x_1 = 0``) of a strongly definite ``A``."""
    require_finite(A)
    if not A.is_square():
        raise ShapeError("expected a square matrix")
    if any(A[i, i] != 0 for i in range(A.n)):
        raise PreconditionError("expected zero diagonal")
    box = [(0, 0)] + [(math.ceil(A[i, 0]), math.floor(-A[0, i])) for i in range(1, A.n)]
    size = box_size(box)
    if size == 0:
        return None
    limit = _budget(budget)
    if size > limit:
        raise BudgetExceededError(f"{size} candidates exceed the budget of {limit}")
    for cand in itertools.product(*(range(lo, hi + 1) for lo, hi in box)):
        x = tuple(Fraction(v) for v in cand)
        if mp_apply(A, x) == x:
            return x
    return None


MAX_ORACLE_ORDER = 7


def elementary_cycles(A: MpMatrix):
    """Every elementary cycle of the digraph of ``A`` as a closed vertex tuple."""
    n = A.n
    for start in range(n):
        stack = [(start, (start,))]
        while stack:
            u, path = stack.pop()
            for v in range(n):
                if A[u, v] is EPS:
                    continue
                if v == start:
                    yield path + (start,)
                elif v > start and v not in path:
                    stack.append((v, path + (v,)))


def oracle_cycle_mean(A: MpMatrix):
    """Maximum cycle mean by listing all elementary cycles."""
    if not A.is_square():
        raise ShapeError("expected a square matrix")
    if A.n > MAX_ORACLE_ORDER:
        raise BudgetExceededError(f"order {A.n} exceeds {MAX_ORACLE_ORDER}")
    best = EPS
    for cyc in elementary_cycles(A):
        w = sum((A[i, j] for i, j in zip(cyc, cyc[1:])), Fraction(0))
        mean = w / (len(cyc) - 1)
        if mean > best:
            best = mean
    return best


def oracle_permanent(A: MpMatrix) -> tuple[Fraction, int]:
    """``(per(A), number of optimal permutations)`` by full enumeration."""
    require_finite(A)
    if not A.is_square():
        raise ShapeError("expected a square matrix")
    if A.n > MAX_ORACLE_ORDER:
        raise BudgetExceededError(f"order {A.n} exceeds {MAX_ORACLE_ORDER}")
    S, D = _as_int_array(A)
    perms = np.array(list(itertools.permutations(range(A.n))), dtype=np.intp)
    weights = S[np.arange(A.n)[None, :], perms].sum(axis=1)
    best = weights.max()
    return Fraction(int(best), D), int((weights == best).sum())
