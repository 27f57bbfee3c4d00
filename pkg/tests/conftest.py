"""Shared sweep helpers: every ADE type up to rank 8 and every
configuration with at most four retained vertices."""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import List, Tuple

from knitchambers import Configuration, DynkinType, build_diagram, knit

SWEEP_TYPES: Tuple[DynkinType, ...] = tuple(
    [DynkinType("A", n) for n in range(1, 9)]
    + [DynkinType("D", n) for n in range(4, 9)]
    + [DynkinType("E", n) for n in (6, 7, 8)]
)

MAX_RETAINED = 4


def sweep_configurations() -> List[Configuration]:
    """Exhaustive: all subsets of size <= 4 of non-extended vertices,
    in canonical vertex order."""
    out: List[Configuration] = []
    for dtype in SWEEP_TYPES:
        diagram = build_diagram(dtype)
        fin = diagram.finite_vertices
        for k in range(1, min(MAX_RETAINED, len(fin)) + 1):
            for subset in itertools.combinations(fin, k):
                out.append(Configuration(diagram, subset))
    return out


@lru_cache(maxsize=None)
def cached_knit(config: Configuration, slot: int):
    return knit(config, slot)
