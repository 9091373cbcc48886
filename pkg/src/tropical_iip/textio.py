"""Reading and writing the plain-text matrix format.

Format::

    # comment lines start with '#'
    m n
    a11 a12 ... a1n
    ...
    am1 am2 ... amn

Entries are integers, ``p/q`` fractions, decimal literals (read exactly) or
``*`` for epsilon.  Blank lines are ignored.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .errors import ParseError, ShapeError
from .matrix import MpMatrix
from .scalar import EPS, format_scalar


def parse_entry(token: str, line: int | None = None, column: int | None = None):
    if token == "*":
        return EPS
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad entry {token!r}", line, column) from None


def _tokens(line: str):
    """Yield ``(token, 1-based column)`` pairs."""
    col = 0
    for piece in line.split():
        col = line.index(piece, col)
        yield piece, col + 1
        col += len(piece)


def parse_matrix(text: str) -> MpMatrix:
    lines = [
        (num, raw)
        for num, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty input, expected a 'm n' header")
    num, header = lines[0]
    toks = list(_tokens(header))
    if len(toks) != 2:
        raise ParseError("header must be 'm n'", num, 1)
    try:
        m, n = int(toks[0][0]), int(toks[1][0])
    except ValueError:
        raise ParseError("header dimensions must be integers", num, 1) from None
    if m < 1 or n < 1:
        raise ParseError("dimensions must be at least 1", num, 1)
    body = lines[1:]
    if len(body) != m:
        where = body[-1][0] if body else num
        raise ParseError(f"expected {m} rows, found {len(body)}", where)
    rows = []
    for num, raw in body:
        toks = list(_tokens(raw))
        if len(toks) != n:
            raise ParseError(f"expected {n} entries, found {len(toks)}", num, 1)
        rows.append([parse_entry(t, num, c) for t, c in toks])
    return MpMatrix(rows)


def read_matrix(path) -> MpMatrix:
    return parse_matrix(Path(path).read_text())


def format_matrix(A: MpMatrix) -> str:
    lines = [f"{A.m} {A.n}"]
    lines += [" ".join(format_scalar(v) for v in row) for row in A.rows]
    return "\n".join(lines) + "\n"


def write_matrix(A: MpMatrix, path) -> None:
    Path(path).write_text(format_matrix(A))


def parse_vector(text: str) -> tuple:
    """Parse an inline vector such as ``"1,3"``, ``"(1, -1/2)"`` or ``"1 3"``."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = [p for p in body.replace(",", " ").split()]
    if not parts:
        raise ParseError(f"empty vector {text!r}")
    return tuple(parse_entry(p, None, i + 1) for i, p in enumerate(parts))


def load_vector(arg: str) -> tuple:
    """A vector given inline, or as a path to a one-row / one-column matrix file."""
    path = Path(arg)
    if path.is_file():
        A = read_matrix(path)
        if A.n == 1:
            return A.col(0)
        if A.m == 1:
            return A.row(0)
        raise ShapeError(f"{arg}: a vector file must have one row or one column")
    return parse_vector(arg)


def format_vector(x: Sequence) -> str:
    return "(" + ",".join(format_scalar(v) for v in x) + ")"
