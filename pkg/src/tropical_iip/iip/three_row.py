"""Integer images of column typical 3 x n matrices in O(n^2)."""

from __future__ import annotations

import numpy as np

from ..errors import PreconditionError
from ..matrix import MpMatrix, mp_apply, require_finite
from ..outcome import ALL_K_FAILED, Empty, Witness
from ._kernel import p5_kernel, residues, scale_matrix, unscale
from .profile import _typical_mask


def p6_solve(A: MpMatrix) -> Witness | Empty:
    """Decide ``IIm(A) != {}`` for a column typical ``A`` with three rows.

    After shifting every column so that its third entry is zero, an integer
    image with third component 0 has some ``x_k = 0 = max x``.  For each
    ``k`` that leaves a two-row problem on the other columns: find ``z <= 0``
    with integer image bounded below by (the ceiling of) the first two
    entries of column ``k``.  The lowest successful ``k`` is returned.
    """
    require_finite(A)
    if A.m != 3:
        raise PreconditionError(f"p6_solve needs exactly 3 rows, got {A.m}")
    S, _, D = scale_matrix(A)
    if not _typical_mask(residues(S, D)).all():
        raise PreconditionError("p6_solve needs a column typical matrix")
    shift = S[2]
    top = S[:2] - shift
    n = A.n
    for k in range(n):
        found = p5_kernel(np.delete(top, k, axis=1), top[:, k], D)
        if found is None:
            continue
        z, _ = found
        xs = np.insert(z, k, 0) - shift
        x = unscale(xs, D)
        return Witness(x, mp_apply(A, x), "three-row-typical", {"k": k})
    return Empty(ALL_K_FAILED, "three-row-typical")
