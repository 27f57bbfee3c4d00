#!/usr/bin/env python3
"""Run every bundled example configuration and print a summary table.

With --out DIR, also write the full report artifacts for each example
into DIR/<name>/.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from knitchambers import bounds, enhanced_report, enumerate_chambers, run_report
from knitchambers.cli import parse_spec
from knitchambers.fixtures import fixture_configuration, fixture_names, fixture_spec


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=None, help="write report artifacts here")
    args = parser.parse_args(argv)

    header = f"{'example':16s} {'diagram':8s} {'slots':22s} " \
             f"{'chambers':>8s} {'walls':>5s} {'classes':>7s} {'bounds':>10s}"
    print(header)
    print("-" * len(header))
    for name in fixture_names():
        cfg = fixture_configuration(name)
        structure = enumerate_chambers(cfg)
        rep = enhanced_report(structure)
        lo, hi = bounds(structure, rep)
        slots = ",".join(cfg.slots)
        print(f"{name:16s} {str(cfg.diagram.dtype):8s} {slots:22s} "
              f"{structure.n_chambers:>8d} {len(structure.walls):>5d} "
              f"{rep.n_classes:>7d} {f'({lo},{hi})':>10s}")
        if args.out:
            spec = parse_spec(json.dumps(fixture_spec(name)))
            out_dir = Path(args.out) / name
            run_report(spec, str(out_dir))
    return 0


if __name__ == "__main__":
    sys.exit(main())
