import argparse
import subprocess
import sys
from pathlib import Path

import pytest

from tropical_iip.experiments import (
    ScalingConfig,
    SweepConfig,
    add_config_arguments,
    config_from_args,
    run_scaling,
    run_sweep,
)

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


@pytest.mark.parametrize("family", ["random", "column-typical", "acu", "column-uniform"])
def test_sweep_agrees(family):
    stats = run_sweep(SweepConfig(trials=60, family=family, seed=3))
    assert sum(s.get("witness", 0) + s.get("empty", 0) for s in stats.values()) == 60
    assert not any(s.get("disagree") or s.get("unsound") for s in stats.values())


def test_scaling_rows():
    rows = run_scaling(ScalingConfig(method="p7", sizes=[20, 40], reps=1))
    assert [n for n, _ in rows] == [20, 40]


def test_config_round_trip():
    parser = argparse.ArgumentParser()
    add_config_arguments(parser, ScalingConfig)
    cfg = config_from_args(ScalingConfig, parser.parse_args(["--sizes", "5", "10", "--method", "p7"]))
    assert cfg == ScalingConfig(method="p7", sizes=[5, 10])


@pytest.mark.parametrize("argv", [
    ["oracle_sweep.py", "--trials", "20"],
    ["scaling.py", "--sizes", "50", "100", "--reps", "1"],
    ["schedule_demo.py"],
])
def test_scripts_run(argv):
    proc = subprocess.run([sys.executable, str(SCRIPTS / argv[0]), *argv[1:]], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout
