"""Column typical matrices: square case via the assignment problem,
rectangular case via its square submatrices."""

from __future__ import annotations

import itertools
import math

from ..assignment import normalize_strongly_definite, permanent_and_ap
from ..errors import PreconditionError, UnsupportedInstanceError
from ..matrix import MpMatrix, mp_apply, require_finite
from ..outcome import AP_NOT_UNIQUE, NO_FEASIBLE_SUBMATRIX, NO_INTEGER_EIGENVECTOR, Empty, Witness
from ..spectral import integer_eigen
from .profile import classify

DEFAULT_MAX_SUBSETS = 20_000


def _require_typical(A: MpMatrix) -> None:
    require_finite(A)
    if not classify(A).column_typical:
        raise PreconditionError("matrix is not column typical")


def _square_typical(A: MpMatrix) -> Witness | Empty:
    if not permanent_and_ap(A).unique:
        return Empty(AP_NOT_UNIQUE, "square-typical")
    Q, AQ = normalize_strongly_definite(A)
    space = integer_eigen(AQ)
    if space is None:
        return Empty(NO_INTEGER_EIGENVECTOR, "square-typical")
    v = space.sample
    x = Q.apply(v)
    return Witness(x, mp_apply(A, x), "square-typical")


def square_ct_iip(A: MpMatrix) -> Witness | Empty:
    """IIP for a square column typical matrix.

    A non-unique optimal permutation rules out integer images; otherwise the
    integer images are exactly the integer eigenvectors of the strongly
    definite normal form ``A Q``, and ``x = Q v`` maps one back.
    """
    if not A.is_square():
        raise PreconditionError(f"expected a square matrix, got {A.shape}")
    _require_typical(A)
    return _square_typical(A)


def rect_ct_iip(A: MpMatrix, max_subsets: int | None = DEFAULT_MAX_SUBSETS) -> Witness | Empty:
    """IIP for a column typical ``m x n`` matrix by trying every ``m``-column subset."""
    _require_typical(A)
    m, n = A.shape
    if m > n:
        return Empty(NO_FEASIBLE_SUBMATRIX, "rect-typical")
    if max_subsets is not None and math.comb(n, m) > max_subsets:
        raise UnsupportedInstanceError(
            f"{math.comb(n, m)} column subsets exceed the limit of {max_subsets}"
        )
    values = list(A.entries())
    margin = max(values) - min(values) + 1
    for cols in itertools.combinations(range(n), m):
        out = _square_typical(A.submatrix(cols=cols))
        if not out:
            continue
        low = min(out.x) - margin
        x = [low] * n
        for c, v in zip(cols, out.x):
            x[c] = v
        x = tuple(x)
        return Witness(x, mp_apply(A, x), "rect-typical", {"columns": cols})
    return Empty(NO_FEASIBLE_SUBMATRIX, "rect-typical")
