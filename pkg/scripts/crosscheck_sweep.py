#!/usr/bin/env python3
"""Sweep abelian groups and cross-validate the two integrality engines.

For every isomorphism type up to --max-order, draws seeded random symbol
sets and compares the structural verdict with the exact spectral one.
Exits nonzero if any disagreement shows up (it should not).
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mixedcayley.groups import isomorphism_types
from mixedcayley.integrality import cross_validate


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-order", type=int, default=24)
    parser.add_argument("--min-order", type=int, default=2)
    parser.add_argument("--samples", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    bad = 0
    print(f"{'group':>16} {'order':>5} {'sets':>6} {'agree':>6} {'integral':>8} {'sec':>6}")
    for group in isomorphism_types(args.max_order, args.min_order):
        start = time.monotonic()
        report = cross_validate(group, mode="random", budget=args.samples, seed=args.seed)
        elapsed = time.monotonic() - start
        print(
            f"{str(group):>16} {group.order:>5} {report.total:>6} "
            f"{report.agreements:>6} {report.integral_count:>8} {elapsed:>6.2f}"
        )
        if not report.agree:
            bad += 1
            for d in report.disagreements:
                print(f"  DISAGREEMENT: {d}")
    if bad:
        print(f"{bad} groups with disagreements")
        return 2
    print("all groups agree")
    return 0


if __name__ == "__main__":
    sys.exit(main())
