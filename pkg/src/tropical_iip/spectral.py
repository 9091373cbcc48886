"""Maximum cycle mean, Kleene star and the eigenproblem for square matrices."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DivergenceError, PreconditionError, ShapeError
from .matrix import MpMatrix, ceil_matrix, mp_apply, require_finite, vshift
from .scalar import EPS, ExtScalar


@dataclass(frozen=True)
class CycleMeanResult:
    value: ExtScalar
    # Closed vertex sequence (first == last), 0-based; None when acyclic.
    cycle: tuple[int, ...] | None


def _require_square(A: MpMatrix) -> None:
    if not A.is_square():
        raise ShapeError(f"expected a square matrix, got {A.shape}")


def _karp(A: MpMatrix) -> ExtScalar:
    n = A.n
    rows = A.rows
    # D[k][v]: heaviest walk with exactly k arcs ending at v, from any start.
    D = [[Fraction(0)] * n]
    for _ in range(n):
        prev = D[-1]
        D.append([max(prev[u] + rows[u][v] for u in range(n)) for v in range(n)])
    best = EPS
    for v in range(n):
        if D[n][v] is EPS:
            continue
        worst = None
        for k in range(n):
            if D[k][v] is EPS:
                continue
            q = (D[n][v] - D[k][v]) / (n - k)
            if worst is None or q < worst:
                worst = q
        if worst is not None and worst > best:
            best = worst
    return best


def _closure(rows: list[list]) -> list[list]:
    """Floyd-Warshall in the max-plus semiring (heaviest non-trivial paths)."""
    n = len(rows)
    S = [list(r) for r in rows]
    for k in range(n):
        Sk = S[k]
        for i in range(n):
            sik = S[i][k]
            if sik is EPS:
                continue
            Si = S[i]
            for j in range(n):
                v = sik + Sk[j]
                if v > Si[j]:
                    Si[j] = v
    return S


def _critical_cycle(A: MpMatrix, lam: Fraction) -> tuple[int, ...]:
    n = A.n
    B = [[a - lam for a in row] for row in A.rows]
    plus = _closure(B)
    zero = Fraction(0)
    # (i, j) is critical iff some zero-weight cycle (in B) uses it.
    succ = {
        i: [j for j in range(n) if B[i][j] is not EPS and B[i][j] + plus[j][i] == zero]
        for i in range(n)
    }
    start = min(i for i in range(n) if succ[i])
    path = [start]
    on_path = {start}

    def dfs(u):
        for v in succ[u]:
            if v == start:
                path.append(v)
                return True
            if v < start or v in on_path:
                continue
            path.append(v)
            on_path.add(v)
            if dfs(v):
                return True
            path.pop()
            on_path.discard(v)
        return False

    dfs(start)
    return tuple(path)


def max_cycle_mean(A: MpMatrix) -> CycleMeanResult:
    """Maximum cycle mean via Karp's recurrence, with a critical witness cycle.

    Among all cycles attaining the maximum, the returned one is the
    lexicographically smallest vertex sequence starting at its least vertex.
    """
    _require_square(A)
    lam = _karp(A)
    if lam is EPS:
        return CycleMeanResult(EPS, None)
    return CycleMeanResult(lam, _critical_cycle(A, lam))


def cycle_mean(A: MpMatrix, cycle: Sequence[int]) -> Fraction:
    """Mean weight of the closed walk ``cycle`` (first vertex repeated at the end)."""
    arcs = list(zip(cycle, cycle[1:]))
    return sum((A[i, j] for i, j in arcs), Fraction(0)) / len(arcs)


def kleene_star(A: MpMatrix) -> MpMatrix:
    """``A* = I + A + A^2 + ...``; raises ``DivergenceError`` if ``lambda(A) > 0``."""
    _require_square(A)
    lam = _karp(A)
    if lam is not EPS and lam > 0:
        raise DivergenceError(f"maximum cycle mean {lam} > 0, the series diverges")
    S = _closure([list(r) for r in A.rows])
    zero = Fraction(0)
    for i in range(A.n):
        if S[i][i] < zero:
            S[i][i] = zero
    return MpMatrix._trusted(tuple(tuple(r) for r in S))


class Definiteness(enum.Enum):
    NOT_DEFINITE = "not_definite"
    DEFINITE = "definite"
    STRONGLY_DEFINITE = "strongly_definite"


def definiteness(A: MpMatrix) -> Definiteness:
    _require_square(A)
    if _karp(A) != 0:
        return Definiteness.NOT_DEFINITE
    if all(A[i, i] == 0 for i in range(A.n)):
        return Definiteness.STRONGLY_DEFINITE
    return Definiteness.DEFINITE


def is_strongly_definite(A: MpMatrix) -> bool:
    return definiteness(A) is Definiteness.STRONGLY_DEFINITE


def is_eigenvector(A: MpMatrix, x: Sequence, lam) -> bool:
    """Whether ``A (x) x == lam (x) x``."""
    return mp_apply(A, x) == vshift(lam, x)


@dataclass(frozen=True)
class EigenGenerator:
    """Principal eigenvalue and, for strongly definite input, ``A*``.

    When ``generator`` is set, the eigenvectors are exactly the vectors
    ``generator (x) u`` for finite ``u``.
    """

    value: Fraction
    generator: MpMatrix | None
    matrix: MpMatrix

    def eigenvector(self, u: Sequence) -> tuple:
        if self.generator is None:
            raise PreconditionError("no generator: the matrix is not strongly definite")
        return mp_apply(self.generator, u)

    def contains(self, x: Sequence) -> bool:
        return is_eigenvector(self.matrix, x, self.value)


def principal_eigen(A: MpMatrix) -> EigenGenerator:
    require_finite(A)
    _require_square(A)
    lam = _karp(A)
    generator = kleene_star(A) if is_strongly_definite(A) else None
    return EigenGenerator(lam, generator, A)


@dataclass(frozen=True)
class IntegerEigenspace:
    """Integer eigenvectors of a strongly definite ``A``: ``ceil(A)* (x) z`` for integer ``z``."""

    ceil_star: MpMatrix
    sample: tuple

    def vector(self, z: Sequence[int]) -> tuple:
        return mp_apply(self.ceil_star, [Fraction(v) for v in z])


def integer_eigen(A: MpMatrix) -> IntegerEigenspace | None:
    """Integer eigenvectors of a strongly definite matrix, or ``None`` if there are none."""
    require_finite(A)
    _require_square(A)
    if not is_strongly_definite(A):
        raise PreconditionError("integer_eigen needs a strongly definite matrix")
    C = ceil_matrix(A)
    if _karp(C) != 0:
        return None
    star = kleene_star(C)
    return IntegerEigenspace(star, mp_apply(star, (Fraction(0),) * A.n))
