"""GIT chamber enumeration by BFS over mutation states, with walls,
skeleton, enhanced per-chamber configurations and minimal-model bounds.

Every state's chart is unimodular, so its pulled-back chamber
``{theta : chart . theta > 0}`` is a simplicial cone: all r rows are
facets, and the neighbor across facet k is exactly ``mutate(state, k)``.
BFS from the identity state therefore visits every region of the wall
arrangement, which is cross-checked against the root-system oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .arrangement import RestrictedArrangement, count_regions, restricted_walls
from .dynkin import DualGraph
from .errors import ConsistencyError, InternalConsistencyError
from .knitting import Configuration
from .linalg import IntMat, IntVec, dot, facet_interior_exists, mat_inv_unimodular, normalize_covector
from .mutation import MutationState, mutate

DEFAULT_STATE_CAP = 65536


@dataclass(frozen=True)
class Chamber:
    """An open simplicial cone of the decomposition, tagged with the curve
    configuration and shortest mutation word that reach it."""

    index: int
    word: Tuple[int, ...]
    slots: Tuple[str, ...]
    inequalities: Tuple[Tuple[IntVec, int], ...]  # (covector, sign): sign*(c.theta) > 0
    interior_point: Tuple[int, ...]
    dual_graph: DualGraph

    @property
    def config_key(self) -> Tuple[str, ...]:
        return tuple(sorted(self.slots))

    def contains(self, point: Sequence[int]) -> bool:
        return all(s * dot(c, point) > 0 for c, s in self.inequalities)


@dataclass(frozen=True)
class SkeletonEdge:
    a: int
    b: int
    wall: IntVec
    slot: int  # mutation slot crossing from chamber a to chamber b
    config_changing: bool


@dataclass(frozen=True)
class Skeleton:
    n_chambers: int
    edges: Tuple[SkeletonEdge, ...]

    def degree(self, i: int) -> int:
        return sum(1 for e in self.edges if i in (e.a, e.b))

    def neighbors(self, i: int) -> Tuple[int, ...]:
        out = [e.b if e.a == i else e.a for e in self.edges if i in (e.a, e.b)]
        return tuple(sorted(out))

    def is_cycle(self) -> bool:
        if len(self.edges) != self.n_chambers or self.n_chambers < 3:
            return False
        if any(self.degree(i) != 2 for i in range(self.n_chambers)):
            return False
        seen = {0}
        cur, prev = 0, -1
        while True:
            nxt = [j for j in self.neighbors(cur) if j != prev]
            if not nxt:
                return False
            prev, cur = cur, nxt[0]
            if cur == 0:
                break
            if cur in seen:
                return False
            seen.add(cur)
        return len(seen) == self.n_chambers


@dataclass(frozen=True)
class EnhancedReport:
    """Per-chamber configuration tagging: distinct configurations (as
    retained-vertex sets of the fixed diagram) with multiplicities."""

    chamber_configs: Tuple[Tuple[str, ...], ...]
    config_classes: Tuple[Tuple[Tuple[str, ...], int], ...]
    config_changing_edges: Tuple[SkeletonEdge, ...]

    @property
    def n_classes(self) -> int:
        return len(self.config_classes)


class ChamberStructure:
    """The full decomposition: chambers, walls, mutation edges and the
    oracle comparison."""

    def __init__(self, config: Configuration, states: List[MutationState],
                 mutation_edges: Dict[Tuple[int, int], int],
                 oracle: Optional[RestrictedArrangement], oracle_count: Optional[int]):
        self.config = config
        self.states = states
        self.mutation_edges = mutation_edges
        self.oracle_arrangement = oracle
        self.oracle_count = oracle_count

        diagram = config.diagram
        chambers: List[Chamber] = []
        wall_set = set()
        for i, st in enumerate(states):
            rows = st.chamber_rows()
            ineqs = []
            for row in rows:
                cov = normalize_covector(row)
                sign = 1 if cov == row else -1
                ineqs.append((cov, sign))
                wall_set.add(cov)
            inv = mat_inv_unimodular(rows)
            ones = tuple(1 for _ in rows)
            interior = tuple(dot(r, ones) for r in inv)
            chambers.append(Chamber(
                index=i,
                word=st.word,
                slots=st.config.slots,
                inequalities=tuple(ineqs),
                interior_point=interior,
                dual_graph=st.config.dual_graph(),
            ))
        self.chambers: Tuple[Chamber, ...] = tuple(chambers)
        self.walls: Tuple[IntVec, ...] = tuple(sorted(wall_set))
        self._signs: Dict[Tuple[int, ...], int] = {}
        for ch in self.chambers:
            sv = self.sign_vector(ch.interior_point)
            if sv in self._signs:
                raise ConsistencyError(
                    f"chambers {self._signs[sv]} and {ch.index} share the sign "
                    f"vector {sv}: regions are not disjoint"
                )
            self._signs[sv] = ch.index

    def sign_vector(self, point: Sequence[int]) -> Tuple[int, ...]:
        out = []
        for w in self.walls:
            v = dot(w, point)
            if v == 0:
                raise InternalConsistencyError(
                    f"point {point} lies on wall {w}; sign vector undefined"
                )
            out.append(1 if v > 0 else -1)
        return tuple(out)

    def on_wall(self, point: Sequence[int]) -> bool:
        return any(dot(w, point) == 0 for w in self.walls)

    def locate(self, point: Sequence[int]) -> Optional[int]:
        """Index of the chamber containing a generic point, or None."""
        vals = [dot(w, point) for w in self.walls]
        if any(v == 0 for v in vals):
            return None
        return self._signs.get(tuple(1 if v > 0 else -1 for v in vals))

    @property
    def n_chambers(self) -> int:
        return len(self.chambers)

    def cplus(self) -> Chamber:
        return self.chambers[0]


def enumerate_chambers(config: Configuration, *, oracle: bool = True,
                       state_cap: Optional[int] = None,
                       precomputed: Optional[Tuple[RestrictedArrangement, int]] = None
                       ) -> ChamberStructure:
    """BFS over single-slot mutations from the identity state.

    States are deduplicated by (slot occupancy, chart); words come out
    shortest-first and lexicographic, so the result is deterministic.  With
    the oracle on, the region count of the restricted root arrangement is
    computed first (the BFS cap is 16x that count) and the wall set and
    chamber count are asserted to match it afterwards.
    """
    arr: Optional[RestrictedArrangement] = None
    n_regions: Optional[int] = None
    if oracle:
        if precomputed is not None:
            arr, n_regions = precomputed
        else:
            arr = restricted_walls(config.diagram, config.slots)
            n_regions = count_regions(arr)
        cap = 16 * n_regions
    else:
        cap = state_cap if state_cap is not None else DEFAULT_STATE_CAP

    start = MutationState.initial(config)
    states: List[MutationState] = [start]
    index_of: Dict[Tuple, int] = {start.key(): 0}
    edges: Dict[Tuple[int, int], int] = {}
    r = config.rank
    head = 0
    while head < len(states):
        st = states[head]
        for slot in range(r):
            child = mutate(st, slot)
            child.check_unimodular()
            key = child.key()
            j = index_of.get(key)
            if j is None:
                if len(states) >= cap:
                    raise ConsistencyError(
                        f"BFS exceeded the state cap of {cap} states for "
                        f"{config.diagram.dtype} slots={config.slots}"
                    )
                j = len(states)
                index_of[key] = j
                states.append(child)
            edges[(head, slot)] = j
        head += 1

    structure = ChamberStructure(config, states, edges, arr, n_regions)

    if structure.cplus().word != ():
        raise InternalConsistencyError("C_+ must carry the empty word")
    for k in range(r):
        unit = tuple(1 if t == k else 0 for t in range(r))
        if unit not in structure.walls:
            raise ConsistencyError(f"coordinate covector {unit} missing from walls")
    if oracle:
        if structure.walls != arr.covectors:
            raise ConsistencyError(
                "wall sets disagree: BFS produced "
                f"{structure.walls}, the root-system oracle gives {arr.covectors}"
            )
        if structure.n_chambers != n_regions:
            raise ConsistencyError(
                f"BFS found {structure.n_chambers} chambers but the arrangement "
                f"oracle counts {n_regions} regions"
            )
    return structure


def skeleton(structure: ChamberStructure, *, verify_facets: bool = True) -> Skeleton:
    """Chambers are adjacent iff their sign vectors w.r.t. the wall set
    differ at exactly one wall and the shared facet has a nonempty relative
    interior (exact rational feasibility); each such crossing coincides
    with a single-slot mutation, which is asserted."""
    walls = structure.walls
    sign_index = structure._signs
    edge_lookup = {}
    for (i, slot), j in structure.mutation_edges.items():
        edge_lookup[(i, j)] = slot
    edges: List[SkeletonEdge] = []
    for sv, i in sorted(sign_index.items(), key=lambda kv: kv[1]):
        for w_pos in range(len(walls)):
            flipped = list(sv)
            flipped[w_pos] = -flipped[w_pos]
            j = sign_index.get(tuple(flipped))
            if j is None or j <= i:
                continue
            slot = edge_lookup.get((i, j))
            if slot is None:
                raise InternalConsistencyError(
                    f"adjacent chambers {i},{j} are not related by a mutation"
                )
            if verify_facets:
                common = [tuple(s * x for x in w)
                          for k, (w, s) in enumerate(zip(walls, sv)) if k != w_pos]
                if not facet_interior_exists(walls[w_pos], common, len(walls[0])):
                    raise InternalConsistencyError(
                        f"chambers {i},{j} differ at wall {walls[w_pos]} but the "
                        f"shared facet has empty relative interior"
                    )
            changing = (structure.chambers[i].config_key
                        != structure.chambers[j].config_key)
            edges.append(SkeletonEdge(i, j, walls[w_pos], slot, changing))
    return Skeleton(structure.n_chambers, tuple(edges))


def enhanced_report(structure: ChamberStructure,
                    skel: Optional[Skeleton] = None) -> EnhancedReport:
    """Tag every chamber with its curve configuration (the retained-vertex
    set, drawn on the fixed diagram) and collect the distinct
    configurations with multiplicity; every skeleton crossing whose two
    sides carry different configurations is flagged."""
    configs = tuple(ch.config_key for ch in structure.chambers)
    counts: Dict[Tuple[str, ...], int] = {}
    for c in configs:
        counts[c] = counts.get(c, 0) + 1
    classes = tuple(sorted(counts.items()))
    if skel is None:
        skel = skeleton(structure, verify_facets=False)
    changing = tuple(e for e in skel.edges if e.config_changing)
    return EnhancedReport(configs, classes, changing)


def bounds(structure: ChamberStructure,
           report: Optional[EnhancedReport] = None) -> Tuple[int, int]:
    """(lower, upper) bounds for the number of minimal models: the number
    of distinct curve configurations, and the number of chambers."""
    if report is None:
        report = enhanced_report(structure)
    return (report.n_classes, structure.n_chambers)
