"""Integer Image Problem solvers: find ``x`` with ``A (x) x`` integer."""

from .acu import p7_solve
from .dispatch import iip_solve
from .profile import ColumnProfile, classify
from .three_row import p6_solve
from .two_row import Segment, TwoRowInterval, p4_describe, p5_solve, two_row_iip, two_row_interval
from .typical import rect_ct_iip, square_ct_iip
from .uniform import uniform_column_witness

__all__ = [
    "ColumnProfile",
    "Segment",
    "TwoRowInterval",
    "classify",
    "iip_solve",
    "p4_describe",
    "p5_solve",
    "p6_solve",
    "p7_solve",
    "rect_ct_iip",
    "square_ct_iip",
    "two_row_iip",
    "two_row_interval",
    "uniform_column_witness",
]
