"""Fractional-part structure of the columns of a finite matrix."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..matrix import MpMatrix
from ._kernel import residues, scale_matrix


@dataclass(frozen=True)
class ColumnProfile:
    fractional_parts: tuple[tuple[Fraction, ...], ...]  # per column, top to bottom
    typical: tuple[bool, ...]
    uniform: tuple[bool, ...]
    column_typical: bool
    column_uniform: bool
    almost_column_uniform: bool
    exceptional_row: int | None

    @property
    def uniform_columns(self) -> tuple[int, ...]:
        return tuple(j for j, u in enumerate(self.uniform) if u)


def _typical_mask(R: np.ndarray) -> np.ndarray:
    m = R.shape[0]
    if m < 2:
        return np.ones(R.shape[1], dtype=bool)
    Rs = np.sort(R, axis=0)
    return (Rs[1:] != Rs[:-1]).all(axis=0)


def _uniform_mask(R: np.ndarray) -> np.ndarray:
    return (R == R[0]).all(axis=0)


def acu_rows(R: np.ndarray) -> list[int]:
    """Rows whose removal leaves a column uniform matrix (needs at least 2 rows)."""
    m = R.shape[0]
    if m < 2:
        return []
    return [r for r in range(m) if _uniform_mask(np.delete(R, r, axis=0)).all()]


def classify_residues(R: np.ndarray, D: int) -> ColumnProfile:
    typical = _typical_mask(R)
    uniform = _uniform_mask(R)
    rows = acu_rows(R)
    fracs = tuple(tuple(Fraction(int(v), D) for v in R[:, j]) for j in range(R.shape[1]))
    return ColumnProfile(
        fractional_parts=fracs,
        typical=tuple(bool(t) for t in typical),
        uniform=tuple(bool(u) for u in uniform),
        column_typical=bool(typical.all()),
        column_uniform=bool(uniform.all()),
        almost_column_uniform=bool(rows),
        exceptional_row=rows[0] if rows else None,
    )


def classify(A: MpMatrix) -> ColumnProfile:
    S, _, D = scale_matrix(A)
    return classify_residues(residues(S, D), D)
