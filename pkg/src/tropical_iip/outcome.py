"""Result types shared by the solvers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Witness:
    """A solution ``x`` together with its image ``y`` (``A (x) x == y``)."""

    x: tuple
    y: tuple
    algorithm: str = ""
    details: dict = field(default_factory=dict, compare=False, repr=False)

    def __bool__(self):
        return True


@dataclass(frozen=True)
class Empty:
    """Proof-backed "no solution"; ``reason`` names the check that failed."""

    reason: str
    algorithm: str = ""

    def __bool__(self):
        return False


INTERVAL_EMPTY = "interval-empty"
ALL_CHECKPOINTS_FAILED = "all-checkpoints-failed"
ALL_K_FAILED = "all-k-failed"
AP_NOT_UNIQUE = "ap-not-unique"
NO_FEASIBLE_SUBMATRIX = "no-feasible-submatrix"
BOX_EMPTY = "box-empty"
ORACLE_EXHAUSTED = "oracle-exhausted"
NO_INTEGER_EIGENVECTOR = "no-integer-eigenvector"
