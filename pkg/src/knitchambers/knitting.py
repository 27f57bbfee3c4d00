"""Exchange-sequence computation by knitting on the AR quiver.

The AR quiver of an ADE surface singularity has the affine Dynkin diagram
as underlying graph, and the mesh rule "left value = sum of middle values
minus right value" collapses to the two-term recurrence

    x_{k+1} = Adj . xbar_k - xbar_{k-1}

on integer vectors indexed by all diagram vertices, where Adj is the
edge-multiplicity adjacency matrix and xbar is x with the circled entries
zeroed.  Circled vertices (vertex 0 and every retained vertex other than
the pivot) have their values harvested into the approximation tally b and
then act like zero.  The run stops at the first column containing -1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from .dynkin import DualGraph, DynkinDiagram, induced_dual_graph, validate_retained
from .errors import ConfigurationError, InternalConsistencyError, NonterminationError


@dataclass(frozen=True)
class Configuration:
    """Ordered retained vertices of a partial resolution.

    Slot ``k`` (0-based) owns the stability coordinate ``theta_k``; the
    extended vertex 0 is always implicitly retained and never occupies a
    slot.  Slot order survives mutation: only the occupying vertex changes.
    """

    diagram: DynkinDiagram
    slots: Tuple[str, ...]

    def __post_init__(self):
        if not self.slots:
            raise ConfigurationError("a configuration needs at least one slot")
        validate_retained(self.diagram, self.slots)

    @property
    def rank(self) -> int:
        return len(self.slots)

    def slot_of(self, vertex: str) -> int:
        return self.slots.index(vertex)

    def retained_set(self) -> frozenset:
        return frozenset(self.slots)

    def dual_graph(self) -> DualGraph:
        return induced_dual_graph(self.diagram, self.slots)

    def replace(self, slot: int, vertex: str) -> "Configuration":
        new_slots = list(self.slots)
        new_slots[slot] = vertex
        return Configuration(self.diagram, tuple(new_slots))

    def with_slots(self, slots: Sequence[str]) -> "Configuration":
        return Configuration(self.diagram, tuple(slots))


@dataclass(frozen=True)
class ExchangeData:
    """Result of one knitting run: the approximation multiplicities ``b``
    (keyed by vertex label, zero entries omitted) and the summand vertex
    replacing the pivot."""

    config: Configuration
    pivot_slot: int
    b: Dict[str, int]
    new_vertex: str

    def __post_init__(self):
        if not self.b:
            raise InternalConsistencyError("approximation b is identically zero")
        delta = self.config.diagram.delta
        lhs = sum(m * delta[v] for v, m in self.b.items())
        rhs = delta[self.pivot_vertex] + delta[self.new_vertex]
        if lhs != rhs:
            raise InternalConsistencyError(
                f"delta balance fails: sum b_j delta_j = {lhs}, "
                f"delta(pivot) + delta(new) = {rhs}"
            )

    @property
    def pivot_vertex(self) -> str:
        return self.config.slots[self.pivot_slot]

    def slot_coefficient(self, slot: int) -> int:
        """b read off at the vertex occupying ``slot`` (0 at the pivot)."""
        if slot == self.pivot_slot:
            return 0
        return self.b.get(self.config.slots[slot], 0)


@dataclass(frozen=True)
class KnitTrace:
    """Raw knitting columns (before circled entries are zeroed) plus the
    values harvested at circled vertices in each step."""

    vertices: Tuple[str, ...]
    columns: Tuple[Tuple[int, ...], ...]
    harvests: Tuple[Dict[str, int], ...]
    exchange: ExchangeData

    def column_value(self, step: int, vertex: str) -> int:
        return self.columns[step][self.vertices.index(vertex)]

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "columns": [list(c) for c in self.columns],
            "harvests": [dict(sorted(h.items())) for h in self.harvests],
            "b": dict(sorted(self.exchange.b.items())),
            "new_vertex": self.exchange.new_vertex,
        }


def step_cap(diagram: DynkinDiagram) -> int:
    return 64 * len(diagram.vertices) * max(diagram.delta.values())


def knit_trace(config: Configuration, pivot_slot: int) -> KnitTrace:
    """Run the knitting recurrence at ``pivot_slot`` and keep the full trace."""
    if not 0 <= pivot_slot < config.rank:
        raise ConfigurationError(f"pivot slot {pivot_slot} out of range")
    diagram = config.diagram
    verts = diagram.vertices
    n = len(verts)
    index = {v: i for i, v in enumerate(verts)}
    nbrs = [tuple((index[w], m) for w, m in diagram.neighbors[v]) for v in verts]
    pivot_vertex = config.slots[pivot_slot]
    circled = {index["0"]}
    circled.update(index[v] for v in config.slots if v != pivot_vertex)

    b: Dict[str, int] = {}
    columns: List[Tuple[int, ...]] = []
    harvests: List[Dict[str, int]] = []

    def harvest(col: List[int]) -> Dict[str, int]:
        taken: Dict[str, int] = {}
        for i in circled:
            if col[i]:
                taken[verts[i]] = col[i]
                b[verts[i]] = b.get(verts[i], 0) + col[i]
                col[i] = 0
        return taken

    prev = [0] * n
    cur = [0] * n
    cur[index[pivot_vertex]] = 1
    columns.append(tuple(cur))
    harvests.append(harvest(cur))

    cap = step_cap(diagram)
    for _ in range(cap):
        nxt = [sum(m * cur[j] for j, m in nbrs[i]) - prev[i] for i in range(n)]
        columns.append(tuple(nxt))
        negatives = [i for i, val in enumerate(nxt) if val < 0]
        if negatives:
            if len(negatives) != 1 or nxt[negatives[0]] != -1:
                raise InternalConsistencyError(
                    f"knitting produced a negative column other than a single -1: "
                    f"{dict(zip(verts, nxt))}"
                )
            new_vertex = verts[negatives[0]]
            if new_vertex == "0" or new_vertex in set(config.slots) - {pivot_vertex}:
                raise InternalConsistencyError(
                    f"replacement vertex {new_vertex} collides with a circled vertex"
                )
            harvests.append(harvest(nxt))
            exchange = ExchangeData(config, pivot_slot, dict(b), new_vertex)
            return KnitTrace(verts, tuple(columns), tuple(harvests), exchange)
        harvests.append(harvest(nxt))
        prev, cur = cur, nxt
    raise NonterminationError(
        f"knitting did not terminate within {cap} steps for {config.diagram.dtype} "
        f"slots={config.slots} pivot={pivot_vertex}; last columns: {columns[-3:]}"
    )


def knit(config: Configuration, pivot_slot: int) -> ExchangeData:
    """Minimal approximation coefficients and replacement summand."""
    return knit_trace(config, pivot_slot).exchange
