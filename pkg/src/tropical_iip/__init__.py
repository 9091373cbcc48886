"""Exact max-plus linear algebra and solvers for the integer image problem."""

from .errors import (
    BudgetExceededError,
    DivergenceError,
    ParseError,
    PreconditionError,
    ShapeError,
    TropicalError,
    UnsupportedEntryError,
    UnsupportedInstanceError,
)
from .matrix import (
    GenPermMatrix,
    MpMatrix,
    conjugate,
    frac_decompose,
    minplus_apply,
    minplus_matmul,
    mp_apply,
    mp_matmul,
    residual,
)
from .outcome import Empty, Witness
from .scalar import EPS

__version__ = "0.1.0"

__all__ = [
    "EPS",
    "BudgetExceededError",
    "DivergenceError",
    "Empty",
    "GenPermMatrix",
    "MpMatrix",
    "ParseError",
    "PreconditionError",
    "ShapeError",
    "TropicalError",
    "UnsupportedEntryError",
    "UnsupportedInstanceError",
    "Witness",
    "conjugate",
    "frac_decompose",
    "minplus_apply",
    "minplus_matmul",
    "mp_apply",
    "mp_matmul",
    "residual",
]
