"""Witness for matrices with a uniform column."""

from __future__ import annotations

from ..matrix import MpMatrix, mp_apply
from ..outcome import Witness
from ._kernel import residues, scale_matrix, unscale
from .profile import _uniform_mask


def uniform_column_witness(A: MpMatrix) -> Witness | None:
    """Lift the first uniform column to integers and sink every other column
    below it; ``None`` if no column is uniform.

    A column uniform matrix needs no sinking: ``x = -fr(first row)`` lifts
    every entry to an integer at once.
    """
    S, _, D = scale_matrix(A)
    R = residues(S, D)
    mask = _uniform_mask(R)
    if not mask.any():
        return None
    if mask.all():
        x = unscale(-R[0], D)
        return Witness(x, mp_apply(A, x), "uniform-column", {"column": None})
    j = int(mask.argmax())
    margin = S.max() - S.min() + D
    lead = -R[0, j]
    xs = [lead if c == j else lead - margin for c in range(A.n)]
    x = unscale(xs, D)
    return Witness(x, mp_apply(A, x), "uniform-column", {"column": j})
