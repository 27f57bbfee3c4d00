"""Named problem specs for the worked examples shipped with the package,
plus the alias tables translating module-style vertex names (R, B2, D, ...)
to the canonical labelling.

Every figure-level example is a runnable spec: load one with
``fixture_spec(name)`` and feed it to ``cli.run_report`` or build the
configuration directly with ``fixture_configuration(name)``.
"""

from __future__ import annotations

from typing import Dict, Tuple

from .dynkin import DynkinType, build_diagram
from .knitting import Configuration

# Module-name aliases per diagram, keyed by str(DynkinType).  "R" is the
# free summand, i.e. the extended vertex (rejected in retained lists, but
# resolvable so the error message can say why).
PAPER_ALIASES: Dict[str, Dict[str, str]] = {
    "D4": {"R": "0", "M": "h2", "A1": "f1", "A2": "f2", "A3": "f3"},
    "D5": {"R": "0", "B1": "h2", "B2": "h3", "A1": "f1", "A2": "f2", "A3": "f3"},
    "E6": {"R": "0"},
    "E7": {"R": "0", "B1": "1", "C1": "2", "D": "3", "C2": "4",
           "B2": "5", "A2": "6", "B3": "7"},
    "E8": {"R": "0"},
}

# Named problem specs.  Retained lists use the module-style names where the
# source figures do; slot order matters (it fixes the theta coordinates).
FIXTURE_SPECS: Dict[str, dict] = {
    # D5 knitting demonstration: End(R + A1 + B2), pivot B2.
    "d5-knitting": {"diagram": "D5", "retained": ["A1", "B2"]},
    # E7 with the two curves B2 (slot 0) and D (slot 1): 12 chambers.
    "e7-b2-d": {"diagram": "E7", "retained": ["B2", "D"]},
    # D4 with the three outer curves: 32 chambers, every wall crossing
    # from C_+ swaps an outer curve for the hub.
    "d4-outer": {"diagram": "D4", "retained": ["A1", "A2", "A3"]},
    # D4 keeping two leaves and the hub (slot order leaf, leaf, hub):
    # the (1,2,1) picture with its seven listed walls.
    "d4-121": {"diagram": "D4", "retained": ["f1", "f2", "h2"]},
    # E6 keeping the two chain ends and the centre: the (1,3,1) picture,
    # 60 chambers and ten walls.
    "e6-131": {"diagram": "E6", "retained": ["1", "5", "3"]},
    # E6 two-curve configuration (chain end + centre): 10 chambers and
    # five distinct curve configurations.
    "e6-enhanced": {"diagram": "E6", "retained": ["1", "3"]},
    # The two-curve series: walls theta1, theta2, theta1 + k*theta2 for
    # k up to 1, 2, 3, 4, hence 6, 8, 10, 12 chambers.
    "two-curve-a2": {"diagram": "A2", "retained": ["1", "2"]},
    "two-curve-d4": {"diagram": "D4", "retained": ["f1", "h2"]},
    "two-curve-e6": {"diagram": "E6", "retained": ["1", "3"]},
    "two-curve-e7": {"diagram": "E7", "retained": ["6", "3"]},
    # Full minimal resolutions (Weyl-count checks).
    "full-a2": {"diagram": "A2", "retained": ["1", "2"]},
    "full-a3": {"diagram": "A3", "retained": ["1", "2", "3"]},
    "full-d4": {"diagram": "D4", "retained": ["f1", "f2", "f3", "h2"]},
}


def resolve_vertex(dtype: DynkinType, name) -> str:
    """Map a module-style alias or canonical label to the canonical label.
    Unknown names come back unchanged for the caller to reject."""
    label = str(name)
    return PAPER_ALIASES.get(str(dtype), {}).get(label, label)


def fixture_spec(name: str) -> dict:
    spec = FIXTURE_SPECS[name]
    return {"diagram": spec["diagram"], "retained": list(spec["retained"])}


def fixture_configuration(name: str) -> Configuration:
    spec = FIXTURE_SPECS[name]
    dtype = DynkinType.parse(spec["diagram"])
    diagram = build_diagram(dtype)
    slots = tuple(resolve_vertex(dtype, v) for v in spec["retained"])
    return Configuration(diagram, slots)


def fixture_names() -> Tuple[str, ...]:
    return tuple(sorted(FIXTURE_SPECS))
