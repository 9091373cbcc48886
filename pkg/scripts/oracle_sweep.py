#!/usr/bin/env python3
"""Solve random instances with the dispatcher and the brute-force oracle; report agreement.

    python3 scripts/oracle_sweep.py --family acu --trials 1000
"""

import argparse
import sys

from tropical_iip.experiments import FAMILIES, SweepConfig, add_config_arguments, config_from_args, run_sweep


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    add_config_arguments(parser, SweepConfig)
    cfg = config_from_args(SweepConfig, parser.parse_args())
    if cfg.family not in FAMILIES:
        parser.error(f"--family must be one of {FAMILIES}")
    stats = run_sweep(cfg)
    print(f"{'algorithm':<24}{'witness':>9}{'empty':>8}{'disagree':>10}{'unsound':>9}")
    bad = 0
    for alg, s in stats.items():
        bad += s.get("disagree", 0) + s.get("unsound", 0)
        print(f"{alg:<24}{s.get('witness', 0):>9}{s.get('empty', 0):>8}"
              f"{s.get('disagree', 0):>10}{s.get('unsound', 0):>9}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
