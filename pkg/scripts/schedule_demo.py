#!/usr/bin/env python3
"""Machine start times for prescribed completion times.

Machine j starts at x_j; product i is done once every component has arrived,
at max_j (a_ij + x_j). Given deadlines b we get the latest start times; if no
start times meet every deadline exactly we report which products finish early.
Then we ask for start times that make every completion time an integer.
"""

from fractions import Fraction

from tropical_iip import MpMatrix, mp_apply
from tropical_iip.iip import iip_solve
from tropical_iip.onesided import solve_one_sided
from tropical_iip.textio import format_vector

A = MpMatrix([["2.5", "4", "1.2"], ["3", "1.7", "2.2"], ["1.5", "3.3", "4.1"]])


def show(label, v):
    print(f"{label:<22}{format_vector(v)}")


def main():
    for b in [(Fraction(10), Fraction(9), Fraction("10.5")), (Fraction(6), Fraction(9), Fraction(7))]:
        sol = solve_one_sided(A, b)
        show("deadlines", b)
        show("latest start times", sol.xbar)
        show("completion", mp_apply(A, sol.xbar))
        if not sol.solvable:
            print("finish early:        ", sorted(i + 1 for i in sol.uncovered_rows))
        print()
    out = iip_solve(A)
    if out:
        print(f"integer completion times via {out.algorithm}:")
        show("start times", out.x)
        show("completion", out.y)
    else:
        print(f"no start times give integer completion times ({out.reason})")


if __name__ == "__main__":
    main()
