"""Integer images of almost column uniform matrices in O(m n^2)."""

from __future__ import annotations

import math

import numpy as np

from ..errors import PreconditionError
from ..matrix import MpMatrix, mp_apply, require_finite
from ..outcome import ALL_K_FAILED, Empty, Witness
from ._kernel import residues, scale_matrix, unscale
from .profile import _uniform_mask, acu_rows
from .uniform import uniform_column_witness


def p7_solve(A: MpMatrix, exceptional_row: int | None = None) -> Witness | Empty:
    """Integer image of an almost column uniform matrix.

    ``exceptional_row`` defaults to the lowest row whose removal leaves a
    column uniform matrix.  With that row shifted to zero and ``f_j`` the
    shared fractional part of column ``j`` elsewhere, an integer image exists
    iff for some ``k`` the vector ``x = -f`` with ``x_k = 0`` already works,
    which only needs the rows other than the exceptional one, restricted to
    the columns ``j != k``, to dominate column ``k``.
    """
    require_finite(A)
    S, _, D = scale_matrix(A)
    R = residues(S, D)
    candidates = acu_rows(R)
    if exceptional_row is None:
        if not candidates:
            raise PreconditionError("matrix is not almost column uniform")
        r = candidates[0]
    else:
        r = exceptional_row
        if not 0 <= r < A.m or r not in candidates:
            raise PreconditionError(f"row {r} is not an exceptional row of this matrix")
    if _uniform_mask(R).any():
        return uniform_column_witness(A)

    shift = S[r]
    rest = np.delete(S, r, axis=0) - shift
    f = rest[0] % D
    lifted = rest - f
    n = A.n
    witness_k = None
    for k in range(n):
        if n == 1:
            break
        Bz = np.delete(lifted, k, axis=1).max(axis=1)
        if (Bz >= rest[:, k]).all():
            witness_k = k
            break
    if witness_k is None:
        return Empty(ALL_K_FAILED, "almost-column-uniform")
    xs = -f
    xs[witness_k] = 0
    x = unscale(xs - shift, D)
    return Witness(
        x,
        mp_apply(A, x),
        "almost-column-uniform",
        {"k": witness_k, "exceptional_row": r},
    )


def round_down_uniform(H: MpMatrix, w) -> tuple:
    """For column uniform ``H``: ``w~_j = floor(h_ij + w_j) - h_ij`` (any row ``i``).

    Then ``w~ <= w`` and ``H w~ == floor(H w)``; with ``w = 0`` this is ``-fr``
    of the columns, the candidate the ACU method tests.
    """
    require_finite(H)
    S, _, D = scale_matrix(H)
    if not _uniform_mask(residues(S, D)).all():
        raise PreconditionError("matrix is not column uniform")
    return tuple(math.floor(H[0, j] + wj) - H[0, j] for j, wj in enumerate(w))

