"""Experiment configurations and runners used by ``scripts/``."""

from __future__ import annotations

import argparse
import collections
import dataclasses
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import instances
from .iip import iip_solve, p6_solve, p7_solve
from .matrix import MpMatrix, mp_apply
from .oracle import oracle_iip

FAMILIES = ("random", "column-typical", "acu", "column-uniform")


@dataclass
class SweepConfig:
    """Random instances solved by the dispatcher and by the oracle."""

    seed: int = 0
    trials: int = 500
    family: str = "random"
    m_min: int = 1
    m_max: int = 4
    n_min: int = 1
    n_max: int = 5
    max_num: int = 40
    max_den: int = 10
    budget: int = 10**6


@dataclass
class ScalingConfig:
    """Wall time of the three-row and ACU methods on instances that scan every k."""

    method: str = "p6"
    sizes: list[int] = field(default_factory=lambda: [250, 500, 1000, 2000, 4000])
    rows: int = 10  # ACU only
    reps: int = 5
    seed: int = 0


def add_config_arguments(parser: argparse.ArgumentParser, cls) -> None:
    for f in dataclasses.fields(cls):
        default = f.default if f.default is not dataclasses.MISSING else f.default_factory()
        flag = "--" + f.name.replace("_", "-")
        if isinstance(default, list):
            parser.add_argument(flag, type=int, nargs="+", default=default)
        else:
            parser.add_argument(flag, type=type(default), default=default)


def config_from_args(cls, args: argparse.Namespace):
    return cls(**{f.name: getattr(args, f.name) for f in dataclasses.fields(cls)})


def _instance(rng: random.Random, cfg: SweepConfig) -> MpMatrix:
    m = rng.randint(cfg.m_min, cfg.m_max)
    n = rng.randint(cfg.n_min, cfg.n_max)
    if cfg.family == "random":
        return instances.matrix(rng, m, n, cfg.max_num, cfg.max_den)
    if cfg.family == "column-typical":
        return instances.column_typical(rng, m, n, den=max(cfg.max_den, m))
    if cfg.family == "acu":
        return instances.almost_column_uniform(rng, max(m, 2), n, den=max(cfg.max_den, 2))
    if cfg.family == "column-uniform":
        return instances.column_uniform(rng, m, n, den=cfg.max_den)
    raise ValueError(f"unknown family {cfg.family!r}; choose from {FAMILIES}")


def run_sweep(cfg: SweepConfig) -> dict:
    """Per-algorithm counts of witnesses, empties and oracle disagreements."""
    rng = random.Random(cfg.seed)
    stats = collections.defaultdict(collections.Counter)
    for _ in range(cfg.trials):
        A = _instance(rng, cfg)
        out = iip_solve(A, budget=cfg.budget)
        want = oracle_iip(A, budget=cfg.budget)
        s = stats[out.algorithm]
        s["witness" if out else "empty"] += 1
        if bool(out) != bool(want):
            s["disagree"] += 1
        if out and not (mp_apply(A, out.x) == out.y and all(v.denominator == 1 for v in out.y)):
            s["unsound"] += 1
    return {k: dict(v) for k, v in sorted(stats.items())}


def p6_scan_all(rng: random.Random, n: int) -> MpMatrix:
    p = [rng.randint(-5, 5) for _ in range(n)]
    return MpMatrix([[Fraction(3, 10) + v for v in p], [Fraction(3, 5) + v for v in p], [0] * n])


def acu_scan_all(m: int, n: int) -> MpMatrix:
    col = [Fraction(3, 10)] * (m - 1) + [Fraction(1, 2)]
    return MpMatrix([[col[i]] * n for i in range(m)])


def run_scaling(cfg: ScalingConfig) -> list[tuple[int, float]]:
    rng = random.Random(cfg.seed)
    rows = []
    for n in cfg.sizes:
        if cfg.method == "p6":
            A, solve = p6_scan_all(rng, n), p6_solve
        elif cfg.method == "p7":
            A, solve = acu_scan_all(cfg.rows, n), p7_solve
        else:
            raise ValueError("method must be p6 or p7")
        best = float("inf")
        for _ in range(cfg.reps):
            start = time.perf_counter()
            solve(A)
            best = min(best, time.perf_counter() - start)
        rows.append((n, best))
    return rows
