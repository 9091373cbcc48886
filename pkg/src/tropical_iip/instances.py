"""Seeded random instance generators for experiments and tests."""

from __future__ import annotations

import random
from fractions import Fraction

from .matrix import MpMatrix
from .scalar import EPS


def rational(rng: random.Random, max_num: int = 40, max_den: int = 10) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def matrix(rng: random.Random, m: int, n: int, max_num: int = 40, max_den: int = 10, eps_prob: float = 0.0) -> MpMatrix:
    return MpMatrix(
        [
            [EPS if eps_prob and rng.random() < eps_prob else rational(rng, max_num, max_den) for _ in range(n)]
            for _ in range(m)
        ]
    )


def _distinct_fractions(rng: random.Random, k: int, den: int) -> list[Fraction]:
    return [Fraction(r, den) for r in rng.sample(range(den), k)]


def column_typical(rng: random.Random, m: int, n: int, spread: int = 5, den: int = 10) -> MpMatrix:
    """Each column gets ``m`` distinct fractional parts plus random integer parts."""
    cols = []
    for _ in range(n):
        fr = _distinct_fractions(rng, m, den)
        cols.append([f + rng.randint(-spread, spread) for f in fr])
    return MpMatrix([[cols[j][i] for j in range(n)] for i in range(m)])


def almost_column_uniform(
    rng: random.Random,
    m: int,
    n: int,
    exceptional_row: int | None = None,
    spread: int = 3,
    den: int = 10,
) -> MpMatrix:
    """Column uniform outside one row; the exceptional row differs in every column,
    so no column is uniform."""
    r = rng.randrange(m) if exceptional_row is None else exceptional_row
    rows = [[Fraction(0)] * n for _ in range(m)]
    for j in range(n):
        f, g = _distinct_fractions(rng, 2, den)
        for i in range(m):
            rows[i][j] = (g if i == r else f) + rng.randint(-spread, spread)
    return MpMatrix(rows)


def column_uniform(rng: random.Random, m: int, n: int, spread: int = 5, den: int = 10) -> MpMatrix:
    cols = []
    for _ in range(n):
        f = Fraction(rng.randrange(den), den)
        cols.append([f + rng.randint(-spread, spread) for _ in range(m)])
    return MpMatrix([[cols[j][i] for j in range(n)] for i in range(m)])


def lambda_nonpositive(rng: random.Random, n: int, max_num: int = 40, max_den: int = 10, eps_prob: float = 0.2) -> MpMatrix:
    """Random square matrix shifted so that its maximum cycle mean is ``<= 0``."""
    from .matrix import mp_scale
    from .spectral import max_cycle_mean

    A = matrix(rng, n, n, max_num, max_den, eps_prob)
    lam = max_cycle_mean(A).value
    if lam is EPS:
        return A
    return mp_scale(-lam - Fraction(rng.randint(0, 3), max_den), A)


def strongly_definite(rng: random.Random, n: int, max_num: int = 20, max_den: int = 10, tight_prob: float = 0.3) -> MpMatrix:
    """Zero diagonal and ``a_ij = p_i - p_j - s_ij`` with slack ``s_ij >= 0``.

    Every cycle then weighs ``-sum(s) <= 0``; zero slack is drawn with
    probability ``tight_prob`` so that critical cycles longer than a loop occur.
    """
    p = [rational(rng, max_num, max_den) for _ in range(n)]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(Fraction(0))
                continue
            slack = Fraction(0) if rng.random() < tight_prob else abs(rational(rng, max_num // 2 or 1, max_den))
            row.append(p[i] - p[j] - slack)
        rows.append(row)
    return MpMatrix(rows)
