"""Dense max-plus matrices over the extended rationals.

Vectors are plain tuples of scalars; matrices are immutable ``MpMatrix``
objects.  ``A @ B`` is the max-plus product, and ``A @ x`` applies ``A`` to
a vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ShapeError, UnsupportedEntryError
from .scalar import EPS, to_scalar

Vector = tuple


class MpMatrix:
    """Immutable ``m x n`` matrix of extended scalars, stored row-major."""

    __slots__ = ("_rows", "_shape")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(to_scalar(v) for v in row) for row in rows)
        if not data or not data[0]:
            raise ShapeError("a matrix needs at least one row and one column")
        n = len(data[0])
        if any(len(r) != n for r in data):
            raise ShapeError("ragged rows")
        self._rows = data
        self._shape = (len(data), n)

    @classmethod
    def _trusted(cls, rows: tuple) -> "MpMatrix":
        obj = cls.__new__(cls)
        obj._rows = rows
        obj._shape = (len(rows), len(rows[0]))
        return obj

    @classmethod
    def identity(cls, n: int) -> "MpMatrix":
        zero = Fraction(0)
        return cls._trusted(tuple(tuple(zero if i == j else EPS for j in range(n)) for i in range(n)))

    @classmethod
    def eps(cls, m: int, n: int) -> "MpMatrix":
        return cls._trusted(tuple((EPS,) * n for _ in range(m)))

    @classmethod
    def zeros(cls, m: int, n: int) -> "MpMatrix":
        return cls._trusted(tuple((Fraction(0),) * n for _ in range(m)))

    @classmethod
    def diag(cls, values: Sequence) -> "MpMatrix":
        vals = [to_scalar(v) for v in values]
        n = len(vals)
        return cls._trusted(tuple(tuple(vals[i] if i == j else EPS for j in range(n)) for i in range(n)))

    @classmethod
    def column(cls, values: Sequence) -> "MpMatrix":
        return cls([v] for v in values)

    @property
    def shape(self) -> tuple[int, int]:
        return self._shape

    @property
    def m(self) -> int:
        return self._shape[0]

    @property
    def n(self) -> int:
        return self._shape[1]

    @property
    def rows(self) -> tuple:
        return self._rows

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.n)]

    def entries(self):
        for r in self._rows:
            yield from r

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, MpMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        from .scalar import format_scalar

        body = "; ".join(" ".join(format_scalar(v) for v in r) for r in self._rows)
        return f"MpMatrix([{body}])"

    def __matmul__(self, other):
        if isinstance(other, MpMatrix):
            return mp_matmul(self, other)
        return mp_apply(self, other)

    def is_square(self) -> bool:
        return self.m == self.n

    def is_finite(self) -> bool:
        return all(v is not EPS for v in self.entries())

    def is_integer(self) -> bool:
        return all(v is not EPS and v.denominator == 1 for v in self.entries())

    def transpose(self) -> "MpMatrix":
        return MpMatrix._trusted(tuple(zip(*self._rows)))

    def submatrix(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> "MpMatrix":
        rows = range(self.m) if rows is None else rows
        cols = range(self.n) if cols is None else cols
        return MpMatrix._trusted(tuple(tuple(self._rows[i][j] for j in cols) for i in rows))

    def map(self, fn) -> "MpMatrix":
        return MpMatrix(tuple(fn(v) for v in r) for r in self._rows)

    def to_fraction_lists(self) -> list[list]:
        return [list(r) for r in self._rows]

    def __ge__(self, other: "MpMatrix") -> bool:
        _same_shape(self, other)
        return all(a >= b for a, b in zip(self.entries(), other.entries()))

    def __le__(self, other: "MpMatrix") -> bool:
        _same_shape(self, other)
        return all(a <= b for a, b in zip(self.entries(), other.entries()))


def as_matrix(A) -> MpMatrix:
    return A if isinstance(A, MpMatrix) else MpMatrix(A)


def as_vector(x) -> Vector:
    return tuple(to_scalar(v) for v in x)


def _same_shape(A: MpMatrix, B: MpMatrix) -> None:
    if A.shape != B.shape:
        raise ShapeError(f"shapes {A.shape} and {B.shape} differ")


def require_finite(A: MpMatrix, what: str = "matrix") -> MpMatrix:
    if not A.is_finite():
        raise UnsupportedEntryError(f"{what} has epsilon entries; only finite input is supported")
    return A


def require_finite_vector(x: Sequence, what: str = "vector") -> Vector:
    x = as_vector(x)
    if any(v is EPS for v in x):
        raise UnsupportedEntryError(f"{what} has epsilon entries; only finite input is supported")
    return x


def mp_matmul(A: MpMatrix, B: MpMatrix) -> MpMatrix:
    """Max-plus product: ``c_ij = max_k (a_ik + b_kj)``."""
    if A.n != B.m:
        raise ShapeError(f"cannot multiply {A.shape} by {B.shape}")
    cols = B.columns()
    return MpMatrix._trusted(
        tuple(tuple(max(a + b for a, b in zip(row, col)) for col in cols) for row in A.rows)
    )


def mp_apply(A: MpMatrix, x: Sequence) -> Vector:
    """Max-plus matrix-vector product ``A (x) x``."""
    x = as_vector(x)
    if len(x) != A.n:
        raise ShapeError(f"cannot apply {A.shape} matrix to vector of length {len(x)}")
    return tuple(max(a + v for a, v in zip(row, x)) for row in A.rows)


def mp_add(A: MpMatrix, B: MpMatrix) -> MpMatrix:
    _same_shape(A, B)
    return MpMatrix._trusted(tuple(tuple(max(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A.rows, B.rows)))


def mp_scale(alpha, A: MpMatrix) -> MpMatrix:
    alpha = to_scalar(alpha)
    return MpMatrix._trusted(tuple(tuple(alpha + a for a in r) for r in A.rows))


def mp_power(A: MpMatrix, k: int) -> MpMatrix:
    if not A.is_square():
        raise ShapeError("matrix powers need a square matrix")
    result = MpMatrix.identity(A.n)
    for _ in range(k):
        result = mp_matmul(result, A)
    return result


def minplus_matmul(A: MpMatrix, B: MpMatrix) -> MpMatrix:
    """Min-plus product ``c_ij = min_k (a_ik + b_kj)`` on finite matrices."""
    require_finite(A, "left operand")
    require_finite(B, "right operand")
    if A.n != B.m:
        raise ShapeError(f"cannot multiply {A.shape} by {B.shape}")
    cols = B.columns()
    return MpMatrix._trusted(
        tuple(tuple(min(a + b for a, b in zip(row, col)) for col in cols) for row in A.rows)
    )


def minplus_apply(A: MpMatrix, x: Sequence) -> Vector:
    require_finite(A)
    x = require_finite_vector(x)
    if len(x) != A.n:
        raise ShapeError(f"cannot apply {A.shape} matrix to vector of length {len(x)}")
    return tuple(min(a + v for a, v in zip(row, x)) for row in A.rows)


def conjugate(A: MpMatrix) -> MpMatrix:
    """``A# = -A^T``."""
    require_finite(A)
    return MpMatrix._trusted(tuple(tuple(-a for a in col) for col in zip(*A.rows)))


def residual(A: MpMatrix, b: Sequence) -> Vector:
    """Greatest ``x`` with ``A (x) x <= b``: ``x_j = min_i (b_i - a_ij)``.

    Equal to ``conjugate(A)`` min-plus applied to ``b``.
    """
    require_finite(A)
    b = require_finite_vector(b, "right-hand side")
    if len(b) != A.m:
        raise ShapeError(f"right-hand side has length {len(b)}, matrix has {A.m} rows")
    return tuple(min(bi - a for bi, a in zip(b, col)) for col in zip(*A.rows))


def vmin(x: Sequence, y: Sequence) -> Vector:
    """Componentwise minimum (the min-plus sum)."""
    if len(x) != len(y):
        raise ShapeError("vector lengths differ")
    return tuple(min(a, b) for a, b in zip(x, y))


def vmax(x: Sequence, y: Sequence) -> Vector:
    if len(x) != len(y):
        raise ShapeError("vector lengths differ")
    return tuple(max(a, b) for a, b in zip(x, y))


def vshift(alpha, x: Sequence) -> Vector:
    alpha = to_scalar(alpha)
    return tuple(alpha + v for v in x)


def frac_decompose(A: MpMatrix) -> tuple[MpMatrix, MpMatrix, MpMatrix]:
    """Split a finite matrix into ``(floor(A), fr(A), ceil(A))``."""
    require_finite(A)
    fl = A.map(lambda a: math.floor(a))
    fr = MpMatrix._trusted(tuple(tuple(a - math.floor(a) for a in r) for r in A.rows))
    ce = A.map(lambda a: math.ceil(a))
    return fl, fr, ce


def ceil_matrix(A: MpMatrix) -> MpMatrix:
    return frac_decompose(A)[2]


@dataclass(frozen=True)
class GenPermMatrix:
    """Generalized permutation matrix.

    Column ``j`` holds the single finite entry ``weights[j]`` in row
    ``perm[j]``; everything else is epsilon.
    """

    perm: tuple[int, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(int(p) for p in self.perm))
        object.__setattr__(self, "weights", tuple(to_scalar(w) for w in self.weights))
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"{self.perm} is not a permutation of 0..{n - 1}")
        if len(self.weights) != n or any(w is EPS for w in self.weights):
            raise ValueError("need one finite weight per column")

    @classmethod
    def identity(cls, n: int) -> "GenPermMatrix":
        return cls(tuple(range(n)), (Fraction(0),) * n)

    @property
    def n(self) -> int:
        return len(self.perm)

    def to_matrix(self) -> MpMatrix:
        rows = [[EPS] * self.n for _ in range(self.n)]
        for j, (i, w) in enumerate(zip(self.perm, self.weights)):
            rows[i][j] = w
        return MpMatrix(rows)

    def inverse(self) -> "GenPermMatrix":
        inv = [0] * self.n
        for j, i in enumerate(self.perm):
            inv[i] = j
        return GenPermMatrix(tuple(inv), tuple(-self.weights[inv[c]] for c in range(self.n)))

    def apply(self, v: Sequence) -> Vector:
        """``Q (x) v``: component ``perm[j]`` of the result is ``weights[j] + v_j``."""
        v = as_vector(v)
        if len(v) != self.n:
            raise ShapeError("vector length does not match")
        out = [EPS] * self.n
        for j, (i, w) in enumerate(zip(self.perm, self.weights)):
            out[i] = w + v[j]
        return tuple(out)

    def right_multiply(self, A: MpMatrix) -> MpMatrix:
        """``A (x) Q``: column ``j`` is column ``perm[j]`` of ``A`` shifted by ``weights[j]``."""
        if A.n != self.n:
            raise ShapeError(f"cannot multiply {A.shape} by {self.n}x{self.n}")
        return MpMatrix._trusted(
            tuple(tuple(row[i] + w for i, w in zip(self.perm, self.weights)) for row in A.rows)
        )
