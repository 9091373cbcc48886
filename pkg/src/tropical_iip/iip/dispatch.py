"""Route an IIP instance to the strongest applicable method."""

from __future__ import annotations

import math

from ..errors import UnsupportedInstanceError
from ..matrix import MpMatrix, require_finite
from ..oracle import _budget, box_size, iip_box, oracle_iip
from ..outcome import NO_FEASIBLE_SUBMATRIX, Empty, Witness
from .acu import p7_solve
from .profile import classify
from .three_row import p6_solve
from .two_row import two_row_iip
from .typical import DEFAULT_MAX_SUBSETS, rect_ct_iip, square_ct_iip
from .uniform import uniform_column_witness


def iip_solve(
    A: MpMatrix,
    budget: int | None = None,
    exceptional_row: int | None = None,
    max_subsets: int = DEFAULT_MAX_SUBSETS,
) -> Witness | Empty:
    """Find ``x`` with ``A x`` integer, or prove there is none.

    Raises ``UnsupportedInstanceError`` when no special-case method applies
    and the oracle box exceeds ``budget``; it never guesses.
    """
    budget = _budget(budget)
    require_finite(A)
    m, n = A.shape
    profile = classify(A)
    if exceptional_row is not None:
        return p7_solve(A, exceptional_row)
    if profile.uniform_columns:
        return uniform_column_witness(A)
    if m == 2:
        return two_row_iip(A)
    if m == 3 and profile.column_typical:
        return p6_solve(A)
    if profile.almost_column_uniform:
        return p7_solve(A)
    if profile.column_typical:
        if m > n:
            return Empty(NO_FEASIBLE_SUBMATRIX, "rect-typical")
        if m == n:
            return square_ct_iip(A)
        if math.comb(n, m) <= max_subsets:
            return rect_ct_iip(A, max_subsets)
    size = box_size(iip_box(A))
    if size <= budget:
        return oracle_iip(A, budget)
    raise UnsupportedInstanceError(
        f"no special-case method applies to this {m}x{n} matrix and the "
        f"oracle box ({size} candidates) exceeds the budget of {budget}"
    )
