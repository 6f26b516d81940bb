#!/usr/bin/env python3
"""Census of integral mixed Cayley graphs over small abelian groups.

Counts, for every isomorphism type up to --max-order, how many symbol sets
produce an integral graph, split into symmetric, oriented and properly
mixed cases, against the 2^(n-1) subsets available.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mixedcayley.groups import isomorphism_types
from mixedcayley.integrality import enumerate_integral_sets


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-order", type=int, default=16)
    parser.add_argument("--min-order", type=int, default=2)
    args = parser.parse_args()

    print(f"{'group':>14} {'order':>5} {'integral':>9} {'symmetric':>9} "
          f"{'oriented':>8} {'mixed':>6} {'of 2^(n-1)':>12}")
    for group in isomorphism_types(args.max_order, args.min_order):
        symmetric = oriented = mixed = 0
        for symbols in enumerate_integral_sets(group):
            skew = symbols.skew_part
            if not skew:
                symmetric += 1
            elif skew == symbols.elements:
                oriented += 1
            else:
                mixed += 1
        total = symmetric + oriented + mixed
        print(
            f"{str(group):>14} {group.order:>5} {total:>9} {symmetric:>9} "
            f"{oriented:>8} {mixed:>6} {2 ** (group.order - 1):>12}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
