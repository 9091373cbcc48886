#!/usr/bin/env python3
"""Wall time of the three-row (O(n^2)) and ACU (O(m n^2)) methods under doubling of n.

The instances have no integer image, so every k is tried.

    python3 scripts/scaling.py --method p7 --rows 10 --sizes 500 1000 2000
"""

import argparse

from tropical_iip.experiments import ScalingConfig, add_config_arguments, config_from_args, run_scaling


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    add_config_arguments(parser, ScalingConfig)
    cfg = config_from_args(ScalingConfig, parser.parse_args())
    prev = None
    print(f"{'n':>7}{'seconds':>11}{'ratio':>8}")
    for n, sec in run_scaling(cfg):
        ratio = f"{sec / prev:.2f}" if prev else "-"
        print(f"{n:>7}{sec:>11.4f}{ratio:>8}")
        prev = sec


if __name__ == "__main__":
    main()
