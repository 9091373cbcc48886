"""Max-algebraic permanent, uniqueness of the optimal permutation, and
normalisation of a square matrix to strongly definite form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, ShapeError
from .matrix import GenPermMatrix, MpMatrix, require_finite
from .spectral import is_strongly_definite


@dataclass(frozen=True)
class PermanentResult:
    value: Fraction
    perm: tuple[int, ...]  # row i is assigned column perm[i]
    unique: bool
    row_potential: tuple[Fraction, ...]
    col_potential: tuple[Fraction, ...]


def _hungarian(cost: list[list[Fraction]]):
    """Minimum-cost assignment by shortest augmenting paths with potentials.

    Returns ``(row_to_col, u, v)`` with ``u_i + v_j <= cost_ij`` everywhere and
    equality on the assignment.  Ties go to the smallest column index.
    """
    n = len(cost)
    zero = Fraction(0)
    u = [zero] * (n + 1)
    v = [zero] * (n + 1)
    p = [0] * (n + 1)  # p[j]: row matched to column j (1-based, 0 = free)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [None] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = None
            j1 = 0
            ci = cost[i0 - 1]
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = ci[j - 1] - u[i0] - v[j]
                if minv[j] is None or cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if delta is None or minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    row_to_col = [0] * n
    for j in range(1, n + 1):
        row_to_col[p[j] - 1] = j - 1
    return row_to_col, u[1:], v[1:]


def has_unique_perfect_matching(adj: list[set[int]]) -> bool:
    """Decide uniqueness of the perfect matching of a bipartite graph that has one.

    ``adj[i]`` is the set of columns adjacent to row ``i``.  Forced pairs
    (an endpoint of degree 1) are peeled off repeatedly; the matching is
    unique iff this exhausts the graph.
    """
    n = len(adj)
    rows = {i: set(s) for i, s in enumerate(adj)}
    cols: dict[int, set[int]] = {j: set() for j in range(n)}
    for i, s in rows.items():
        for j in s:
            cols[j].add(i)
    while rows:
        pair = None
        for i, s in rows.items():
            if len(s) == 1:
                pair = (i, next(iter(s)))
                break
        if pair is None:
            for j, s in cols.items():
                if len(s) == 1:
                    pair = (next(iter(s)), j)
                    break
        if pair is None:
            return False
        i, j = pair
        for jj in rows.pop(i):
            cols[jj].discard(i)
        for ii in cols.pop(j):
            if ii in rows:
                rows[ii].discard(j)
        if any(not s for s in rows.values()) or any(not s for s in cols.values()):
            return False
    return True


def permanent_and_ap(A: MpMatrix) -> PermanentResult:
    """``per(A)``, one optimal permutation, and whether it is the only one."""
    require_finite(A)
    if not A.is_square():
        raise ShapeError(f"the permanent needs a square matrix, got {A.shape}")
    n = A.n
    cost = [[-a for a in row] for row in A.rows]
    perm, u, v = _hungarian(cost)
    # dual of the max problem: a_ij <= r_i + c_j, tight on optimal assignments
    r = tuple(-x for x in u)
    c = tuple(-x for x in v)
    value = sum((A[i, perm[i]] for i in range(n)), Fraction(0))
    tight = [{j for j in range(n) if A[i, j] == r[i] + c[j]} for i in range(n)]
    return PermanentResult(value, tuple(perm), has_unique_perfect_matching(tight), r, c)


def normalize_strongly_definite(A: MpMatrix) -> tuple[GenPermMatrix, MpMatrix]:
    """The generalized permutation ``Q`` making ``A (x) Q`` strongly definite.

    Requires a unique optimal permutation.
    """
    res = permanent_and_ap(A)
    if not res.unique:
        raise PreconditionError("the optimal assignment is not unique")
    Q = GenPermMatrix(res.perm, tuple(-A[i, res.perm[i]] for i in range(A.n)))
    AQ = Q.right_multiply(A)
    if not is_strongly_definite(AQ):
        raise AssertionError("normalised matrix is not strongly definite")
    return Q, AQ
