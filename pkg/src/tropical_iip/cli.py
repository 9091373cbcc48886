"""Batch command line over the library.

Every command prints a report of ``key value`` records. With
``--format structured`` each record is a ``key=value`` line; field names are
stable. Indices in the output are 1-based, values are exact rationals.
"""

from __future__ import annotations

import argparse
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from . import errors
from .assignment import permanent_and_ap
from .iip import classify, iip_solve
from .matrix import MpMatrix, mp_apply
from .onesided import functional_range, solve_bounded, solve_one_sided
from .oracle import (
    oracle_cycle_mean,
    oracle_iip,
    oracle_integer_eigen,
    oracle_permanent,
)
from .outcome import Empty
from .scalar import format_scalar, is_eps
from .spectral import definiteness, integer_eigen, kleene_star, max_cycle_mean, principal_eigen
from .textio import format_matrix, load_vector, parse_matrix, read_matrix, write_matrix

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_SHAPE = 4
EXIT_PRECONDITION = 5
EXIT_UNSUPPORTED_INSTANCE = 6
EXIT_BUDGET = 7
EXIT_DIVERGENCE = 8
EXIT_UNSUPPORTED_ENTRY = 9
EXIT_IO = 10

# Most specific first: several error classes share ValueError.
_EXIT_CODES = [
    (errors.ParseError, EXIT_PARSE, "parse-error"),
    (errors.UnsupportedEntryError, EXIT_UNSUPPORTED_ENTRY, "unsupported-entry"),
    (errors.ShapeError, EXIT_SHAPE, "shape-error"),
    (errors.PreconditionError, EXIT_PRECONDITION, "precondition-error"),
    (errors.UnsupportedInstanceError, EXIT_UNSUPPORTED_INSTANCE, "unsupported-instance"),
    (errors.BudgetExceededError, EXIT_BUDGET, "budget-exceeded"),
    (errors.DivergenceError, EXIT_DIVERGENCE, "divergence"),
    (errors.TropicalError, EXIT_ERROR, "error"),
]


class Report:
    """Ordered ``(key, value)`` records plus value rendering options."""

    def __init__(self, decimal: bool = False):
        self.records: list[tuple[str, str]] = []
        self.decimal = decimal
        self.raw: str | None = None  # preformatted output, replaces the records

    def add(self, key: str, value) -> None:
        self.records.append((key, value if isinstance(value, str) else self.scalar(value)))

    def scalar(self, v) -> str:
        if not self.decimal or is_eps(v):
            return format_scalar(v)
        return _decimal(Fraction(v))

    def vector(self, key: str, x: Sequence) -> None:
        self.add(key, "(" + ",".join(self.scalar(v) for v in x) + ")")

    def render(self, fmt: str) -> str:
        if fmt == "structured":
            return "".join(f"{k}={v}\n" for k, v in self.records)
        width = max((len(k) for k, _ in self.records), default=0)
        return "".join(f"{k.ljust(width)}  {v}\n" for k, v in self.records)


def _decimal(q: Fraction, digits: int = 12) -> str:
    # Exact when the expansion terminates, otherwise rounded and marked with "~".
    d = q.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    with localcontext() as ctx:
        ctx.prec = 60
        value = Decimal(q.numerator) / Decimal(q.denominator)
    if d == 1:
        return format(value.normalize(), "f")
    return format(value.quantize(Decimal(1).scaleb(-digits)), "f") + "~"


def _indices(ix) -> str:
    return "{" + ",".join(str(i + 1) for i in sorted(ix)) + "}"


def _perm(p: Sequence[int]) -> str:
    return "(" + ",".join(str(j + 1) for j in p) + ")"


def _load(path: str) -> MpMatrix:
    if path == "-":
        return parse_matrix(sys.stdin.read())
    return read_matrix(path)


def _matrix(report: Report, A: MpMatrix) -> None:
    for i, row in enumerate(A.rows, 1):
        report.add(f"row{i}", " ".join(report.scalar(v) for v in row))


def _outcome(report: Report, out) -> None:
    if isinstance(out, Empty):
        report.add("status", "empty")
        if out.algorithm:
            report.add("algorithm", out.algorithm)
        report.add("reason", out.reason)
        return
    report.add("status", "witness")
    if out.algorithm:
        report.add("algorithm", out.algorithm)
    report.vector("y", out.y)
    report.vector("x", out.x)
    for key, value in out.details.items():
        if value is None:
            continue
        if key in ("k", "exceptional_row", "column"):
            value = str(value + 1)
        elif key == "columns":
            value = _indices(value)
        report.add(key, str(value))


# commands


def cmd_mcm(args, report):
    res = max_cycle_mean(_load(args.matrix))
    report.add("lambda", res.value)
    report.add("cycle", "none" if res.cycle is None else "→".join(str(v + 1) for v in res.cycle))


def cmd_star(args, report):
    S = kleene_star(_load(args.matrix))
    if args.output:
        write_matrix(S, args.output)
        report.add("status", "ok")
        report.add("output", args.output)
        return
    if args.format == "human" and not args.decimal:
        report.raw = format_matrix(S)
        return
    report.add("status", "ok")
    report.add("shape", f"{S.m}x{S.n}")
    _matrix(report, S)


def cmd_classify(args, report):
    prof = classify(_load(args.matrix))
    yes = {True: "yes", False: "no"}
    report.add("column_typical", yes[prof.column_typical])
    report.add("column_uniform", yes[prof.column_uniform])
    report.add("almost_column_uniform", yes[prof.almost_column_uniform])
    report.add("exceptional_row", "none" if prof.exceptional_row is None else str(prof.exceptional_row + 1))
    report.add("uniform_columns", _indices(prof.uniform_columns))
    for j, (fr, typ, uni) in enumerate(zip(prof.fractional_parts, prof.typical, prof.uniform), 1):
        kind = "uniform" if uni else "typical" if typ else "mixed"
        report.add(f"col{j}", kind + " (" + ",".join(report.scalar(v) for v in fr) + ")")


def cmd_perm(args, report):
    res = permanent_and_ap(_load(args.matrix))
    report.add("per", res.value)
    report.add("perm", _perm(res.perm))
    report.add("unique", "yes" if res.unique else "no")


def cmd_solve(args, report):
    A = _load(args.matrix)
    sol = solve_one_sided(A, load_vector(args.b))
    report.add("status", "solvable" if sol.solvable else "unsolvable")
    report.vector("principal", sol.xbar)
    for j, mj in enumerate(sol.mj_sets, 1):
        report.add(f"M{j}", _indices(mj))
    report.add("uncovered", _indices(sol.uncovered_rows))
    if sol.solvable:
        report.add("solutions", "x <= principal with the M_j of the tight columns covering every row")


def cmd_solve_bounded(args, report):
    A = _load(args.matrix)
    _outcome(report, solve_bounded(A, load_vector(args.b), load_vector(args.d)))


def cmd_eigen(args, report):
    A = _load(args.matrix)
    eg = principal_eigen(A)
    report.add("lambda", eg.value)
    report.add("definiteness", definiteness(A).value)
    if eg.generator is not None:
        report.vector("eigenvector", eg.eigenvector([0] * A.n))
        for j, col in enumerate(eg.generator.columns(), 1):
            report.vector(f"generator{j}", col)


def cmd_int_eigen(args, report):
    res = integer_eigen(_load(args.matrix))
    if res is None:
        report.add("status", "empty")
        report.add("reason", "no-integer-eigenvector")
        return
    report.add("status", "witness")
    report.vector("x", res.sample)
    for j, col in enumerate(res.ceil_star.columns(), 1):
        report.vector(f"generator{j}", col)


def cmd_iip(args, report):
    A = _load(args.matrix)
    row = None if args.exceptional_row is None else args.exceptional_row - 1
    _outcome(report, iip_solve(A, budget=args.budget, exceptional_row=row))


def cmd_iip_oracle(args, report):
    _outcome(report, oracle_iip(_load(args.matrix), budget=args.budget))


def cmd_oracle(args, report):
    A = _load(args.matrix)
    if args.problem == "iip":
        _outcome(report, oracle_iip(A, budget=args.budget))
    elif args.problem == "int-eigen":
        x = oracle_integer_eigen(A, budget=args.budget)
        if x is None:
            report.add("status", "empty")
            report.add("reason", "no-integer-eigenvector")
        else:
            report.add("status", "witness")
            report.vector("x", x)
    elif args.problem == "mcm":
        report.add("lambda", oracle_cycle_mean(A))
    else:
        value, count = oracle_permanent(A)
        report.add("per", value)
        report.add("optimal_permutations", str(count))


def cmd_range(args, report):
    (b,) = load_vector(args.b)
    d = None if args.d is None else load_vector(args.d)
    fr = functional_range(load_vector(args.a), b, load_vector(args.c), d)
    if fr.interval.is_empty:
        report.add("status", "empty")
        report.add("reason", "infeasible")
        return
    report.add("status", "ok")
    report.add("lo", fr.interval.lo)
    report.add("hi", fr.interval.hi)
    report.vector("argmin", fr.argmin)
    report.vector("argmax", fr.argmax)


def cmd_schedule(args, report):
    A = _load(args.matrix)
    if args.integer:
        out = iip_solve(A, budget=args.budget)
        if isinstance(out, Empty):
            _outcome(report, out)
            return
        report.add("status", "witness")
        report.add("algorithm", out.algorithm)
        report.vector("start", out.x)
        report.vector("completion", out.y)
        return
    if args.b is None:
        raise errors.ShapeError("schedule needs completion times b, or --integer")
    b = load_vector(args.b)
    sol = solve_one_sided(A, b)
    finish = mp_apply(A, sol.xbar)
    report.add("status", "on-time" if sol.solvable else "unsolvable")
    report.vector("start", sol.xbar)
    report.vector("completion", finish)
    if not sol.solvable:
        # The principal solution never finishes late; unmatched machines finish early.
        report.vector("earliness", [bi - fi for bi, fi in zip(b, finish)])
        report.add("unmet", _indices(sol.uncovered_rows))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "structured"), default="human")
    common.add_argument("--decimal", action="store_true", help="decimal rendering; rounded values end in '~'")
    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--budget", type=int, default=None, help="oracle candidate limit")

    parser = argparse.ArgumentParser(prog="tropical-iip", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help, parents=(common,)):
        p = sub.add_parser(name, help=help, parents=list(parents))
        p.set_defaults(func=func)
        return p

    def matrix_arg(p):
        p.add_argument("matrix", help="matrix file ('-' for stdin)")

    matrix_arg(add("mcm", cmd_mcm, "maximum cycle mean and a critical cycle"))
    p = add("star", cmd_star, "Kleene star")
    matrix_arg(p)
    p.add_argument("-o", "--output", help="write the result as a matrix file")
    matrix_arg(add("classify", cmd_classify, "fractional-part profile of the columns"))
    matrix_arg(add("perm", cmd_perm, "max-plus permanent and optimal permutation"))
    p = add("solve", cmd_solve, "one-sided system A x = b")
    matrix_arg(p)
    p.add_argument("b")
    p = add("solve-bounded", cmd_solve_bounded, "A x = b with x <= d")
    matrix_arg(p)
    p.add_argument("b")
    p.add_argument("d")
    matrix_arg(add("eigen", cmd_eigen, "principal eigenvalue and eigenvectors"))
    matrix_arg(add("int-eigen", cmd_int_eigen, "integer eigenvector of a strongly definite matrix"))
    p = add("iip", cmd_iip, "integer image problem", (common, budget))
    matrix_arg(p)
    p.add_argument("--exceptional-row", type=int, default=None, help="1-based exceptional row (ACU method)")
    matrix_arg(add("iip-oracle", cmd_iip_oracle, "integer image problem by enumeration", (common, budget)))
    p = add("oracle", cmd_oracle, "brute-force ground truth", (common, budget))
    p.add_argument("problem", choices=("iip", "int-eigen", "mcm", "perm"))
    matrix_arg(p)
    p = add("range", cmd_range, "range of max_j(c_j + x_j) over max_j(a_j + x_j) = b, x <= d")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("c")
    p.add_argument("d", nargs="?")
    p = add("schedule", cmd_schedule, "start times for given completion times", (common, budget))
    matrix_arg(p)
    p.add_argument("b", nargs="?")
    p.add_argument("--integer", action="store_true", help="find start times with integer completion times")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "exceptional_row", None) is not None and args.exceptional_row < 1:
        parser.error("--exceptional-row is 1-based")
    report = Report(decimal=args.decimal)
    try:
        args.func(args, report)
    except OSError as exc:
        print(f"tropical-iip: {exc}", file=sys.stderr)
        return EXIT_IO
    except errors.TropicalError as exc:
        for cls, code, tag in _EXIT_CODES:
            if isinstance(exc, cls):
                break
        if args.format == "structured":
            sys.stdout.write(f"status=error\nerror={tag}\nmessage={exc}\n")
        print(f"tropical-iip: {tag}: {exc}", file=sys.stderr)
        return code
    if report.raw is not None:
        sys.stdout.write(report.raw)
    else:
        sys.stdout.write(report.render(args.format))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
