#!/usr/bin/env python3
"""Sweep chamber structures across ADE configurations.

Enumerates every configuration of the requested diagrams up to a retained
count, runs the oracle plus the BFS on each one within budget, and prints
counts and minimal-model bounds.  Useful for spotting interesting
configurations (large gaps between lower and upper bounds, many walls).
"""

from __future__ import annotations

import argparse
import itertools
import sys

from knitchambers import (Configuration, DynkinType, bounds, build_diagram,
                          count_regions, enhanced_report, enumerate_chambers,
                          restricted_walls)
from knitchambers.errors import ResourceBudgetError


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("diagrams", nargs="*",
                        default=["A3", "A4", "D4", "D5", "E6", "E7"],
                        help="Dynkin types to sweep (default: a small set)")
    parser.add_argument("--max-retained", type=int, default=3)
    parser.add_argument("--max-regions", type=int, default=2000,
                        help="skip configurations with more regions than this")
    args = parser.parse_args(argv)

    print(f"{'diagram':8s} {'slots':26s} {'walls':>5s} {'chambers':>8s} "
          f"{'classes':>7s} {'bounds':>12s}")
    skipped = 0
    for name in args.diagrams:
        diagram = build_diagram(DynkinType.parse(name))
        fin = diagram.finite_vertices
        for k in range(1, min(args.max_retained, len(fin)) + 1):
            for subset in itertools.combinations(fin, k):
                cfg = Configuration(diagram, subset)
                try:
                    arr = restricted_walls(diagram, cfg.slots)
                    regions = count_regions(arr)
                except ResourceBudgetError:
                    skipped += 1
                    continue
                if regions > args.max_regions:
                    skipped += 1
                    continue
                structure = enumerate_chambers(cfg, precomputed=(arr, regions))
                rep = enhanced_report(structure)
                lo, hi = bounds(structure, rep)
                print(f"{name:8s} {','.join(subset):26s} "
                      f"{len(structure.walls):>5d} {structure.n_chambers:>8d} "
                      f"{rep.n_classes:>7d} {f'({lo},{hi})':>12s}")
    if skipped:
        print(f"# skipped {skipped} configurations over budget", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
