"""Affine ADE Dynkin diagrams, multiplicities and positive roots.

Canonical vertex labelling (also printed by the ``describe`` CLI
subcommand):

* ``A_n``: cycle ``0 - 1 - 2 - ... - n - 0``; for ``A_1`` the single pair
  ``0 - 1`` carries a double edge.
* ``D_n``: hub chain ``h2 - h3 - ... - h{n-2}`` of multiplicity-2 vertices;
  leaves ``0`` and ``f1`` attach to ``h2``, leaves ``f2`` and ``f3`` attach
  to ``h{n-2}`` (for ``D_4`` all four leaves sit on the single hub ``h2``).
* ``E6``: chain ``1 - 2 - 3 - 4 - 5``, branch ``6`` on ``3``, and ``0 - 6``.
* ``E7``: chain ``0 - 1 - ... - 6``, branch ``7`` on ``3``.
* ``E8``: chain ``0 - 1 - ... - 7``, branch ``8`` on ``5``.

Vertex ``0`` is always the extended vertex; its multiplicity is 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .errors import ConfigurationError, InvalidDiagramError

Root = Tuple[int, ...]

_FAMILIES = ("A", "D", "E")


@dataclass(frozen=True, order=True)
class DynkinType:
    """One of the finite ADE families together with its rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise InvalidDiagramError(f"unknown family {self.family!r}")
        ok = (
            (self.family == "A" and self.rank >= 1)
            or (self.family == "D" and self.rank >= 4)
            or (self.family == "E" and self.rank in (6, 7, 8))
        )
        if not ok:
            raise InvalidDiagramError(
                f"rank {self.rank} is not valid for family {self.family}"
            )

    @classmethod
    def parse(cls, name: str) -> "DynkinType":
        name = str(name).strip()
        if len(name) < 2 or name[0].upper() not in _FAMILIES or not name[1:].isdigit():
            raise InvalidDiagramError(f"cannot parse Dynkin type {name!r}")
        return cls(name[0].upper(), int(name[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class DualGraph:
    """Induced dual graph of a partial resolution: retained vertices,
    the finite-diagram edges between them, and their multiplicities."""

    vertices: Tuple[str, ...]
    edges: FrozenSet[Tuple[str, str]]
    delta: Tuple[int, ...]


class DynkinDiagram:
    """Immutable affine ADE diagram with multiplicities.

    ``vertices[0]`` is the extended vertex ``"0"``; ``finite_vertices``
    fixes the coordinate order used for positive roots.
    """

    def __init__(self, dtype: DynkinType, vertices: Sequence[str],
                 edges: Sequence[Tuple[str, str, int]], delta: Dict[str, int]):
        self.dtype = dtype
        self.vertices: Tuple[str, ...] = tuple(vertices)
        self.finite_vertices: Tuple[str, ...] = tuple(vertices[1:])
        self.edges: Tuple[Tuple[str, str, int], ...] = tuple(
            sorted((min(u, v), max(u, v), m) for u, v, m in edges)
        )
        self.delta: Dict[str, int] = dict(delta)
        nbr: Dict[str, List[Tuple[str, int]]] = {v: [] for v in self.vertices}
        for u, v, m in self.edges:
            nbr[u].append((v, m))
            nbr[v].append((u, m))
        self.neighbors: Dict[str, Tuple[Tuple[str, int], ...]] = {
            v: tuple(sorted(ns)) for v, ns in nbr.items()
        }
        self._check()

    def _check(self) -> None:
        assert self.vertices[0] == "0" and self.delta["0"] == 1
        for v in self.finite_vertices:
            mesh = sum(m * self.delta[w] for w, m in self.neighbors[v])
            assert 2 * self.delta[v] == mesh, f"null-vector identity fails at {v}"

    def __eq__(self, other) -> bool:
        return isinstance(other, DynkinDiagram) and self.dtype == other.dtype

    def __hash__(self) -> int:
        return hash(self.dtype)

    def __repr__(self) -> str:
        return f"DynkinDiagram({self.dtype})"

    def edge_multiplicity(self, u: str, v: str) -> int:
        for w, m in self.neighbors[u]:
            if w == v:
                return m
        return 0

    def finite_index(self, v: str) -> int:
        return self.finite_vertices.index(v)


@lru_cache(maxsize=None)
def build_diagram(dtype: DynkinType) -> DynkinDiagram:
    """Construct the affine diagram with the canonical labelling."""
    fam, n = dtype.family, dtype.rank
    if fam == "A":
        verts = ["0"] + [str(i) for i in range(1, n + 1)]
        if n == 1:
            edges = [("0", "1", 2)]
        else:
            edges = [(str(i), str(i + 1), 1) for i in range(1, n)]
            edges += [("0", "1", 1), ("0", str(n), 1)]
        delta = {v: 1 for v in verts}
    elif fam == "D":
        hubs = [f"h{k}" for k in range(2, n - 1)]
        verts = ["0", "f1"] + hubs + ["f2", "f3"]
        edges = [("0", hubs[0], 1), ("f1", hubs[0], 1),
                 ("f2", hubs[-1], 1), ("f3", hubs[-1], 1)]
        edges += [(hubs[k], hubs[k + 1], 1) for k in range(len(hubs) - 1)]
        delta = {v: 2 if v.startswith("h") else 1 for v in verts}
    else:
        if n == 6:
            verts = ["0"] + [str(i) for i in range(1, 7)]
            edges = [("1", "2", 1), ("2", "3", 1), ("3", "4", 1), ("4", "5", 1),
                     ("3", "6", 1), ("0", "6", 1)]
            delta = {"0": 1, "1": 1, "2": 2, "3": 3, "4": 2, "5": 1, "6": 2}
        elif n == 7:
            verts = ["0"] + [str(i) for i in range(1, 8)]
            edges = [(str(i), str(i + 1), 1) for i in range(0, 6)]
            edges.append(("3", "7", 1))
            delta = {"0": 1, "1": 2, "2": 3, "3": 4, "4": 3, "5": 2, "6": 1, "7": 2}
        else:
            verts = ["0"] + [str(i) for i in range(1, 9)]
            edges = [(str(i), str(i + 1), 1) for i in range(0, 7)]
            edges.append(("5", "8", 1))
            delta = {"0": 1, "1": 2, "2": 3, "3": 4, "4": 5, "5": 6,
                     "6": 4, "7": 2, "8": 3}
    return DynkinDiagram(dtype, verts, edges, delta)


def _cartan_matrix(diagram: DynkinDiagram) -> List[List[int]]:
    fin = diagram.finite_vertices
    n = len(fin)
    C = [[0] * n for _ in range(n)]
    for i, u in enumerate(fin):
        C[i][i] = 2
        for j, v in enumerate(fin):
            if i != j:
                C[i][j] = -diagram.edge_multiplicity(u, v)
    return C


@lru_cache(maxsize=None)
def positive_roots(dtype: DynkinType) -> Tuple[Root, ...]:
    """All positive roots of the finite root system, in the simple-root
    integer basis ordered by ``finite_vertices``.

    Computed by closing the simple roots under simple reflections,
    keeping only vectors with nonnegative coordinates.
    """
    diagram = build_diagram(dtype)
    C = _cartan_matrix(diagram)
    n = len(C)
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        alpha = frontier.pop()
        for i in range(n):
            s = sum(C[i][j] * alpha[j] for j in range(n))
            beta = list(alpha)
            beta[i] -= s
            b = tuple(beta)
            if all(c >= 0 for c in b) and any(b) and b not in roots:
                roots.add(b)
                frontier.append(b)
    return tuple(sorted(roots))


def highest_root(dtype: DynkinType) -> Root:
    diagram = build_diagram(dtype)
    return tuple(diagram.delta[v] for v in diagram.finite_vertices)


def root_support_connected(diagram: DynkinDiagram, root: Root) -> bool:
    support = {v for v, c in zip(diagram.finite_vertices, root) if c}
    if not support:
        return False
    seen = {next(iter(sorted(support)))}
    frontier = list(seen)
    while frontier:
        v = frontier.pop()
        for w, _ in diagram.neighbors[v]:
            if w in support and w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen == support


def induced_dual_graph(diagram: DynkinDiagram, retained: Iterable[str]) -> DualGraph:
    """Dual graph of the partial resolution keeping exactly ``retained``."""
    kept = tuple(retained)
    validate_retained(diagram, kept)
    kept_sorted = tuple(sorted(set(kept)))
    in_kept = set(kept_sorted)
    edges = frozenset(
        (u, v) for u, v, _ in diagram.edges
        if u in in_kept and v in in_kept and u != "0" and v != "0"
    )
    return DualGraph(
        vertices=kept_sorted,
        edges=edges,
        delta=tuple(diagram.delta[v] for v in kept_sorted),
    )


def validate_retained(diagram: DynkinDiagram, retained: Sequence[str]) -> None:
    for v in retained:
        if v == "0":
            raise ConfigurationError("the extended vertex 0 is implicitly retained "
                                     "and may not appear in the retained list")
        if v not in diagram.delta:
            raise ConfigurationError(f"unknown vertex {v!r} for {diagram.dtype}")
    if len(set(retained)) != len(tuple(retained)):
        raise ConfigurationError("retained vertices must be distinct")


def automorphisms(diagram: DynkinDiagram) -> Tuple[Dict[str, str], ...]:
    """All graph automorphisms of the affine diagram fixing vertex 0 and
    preserving multiplicities (found by backtracking; diagrams are tiny)."""
    verts = diagram.vertices
    sig = {v: (diagram.delta[v], tuple(sorted((m, diagram.delta[w])
                                              for w, m in diagram.neighbors[v])))
           for v in verts}
    others = [v for v in verts if v != "0"]
    results: List[Dict[str, str]] = []

    def extend(mapping: Dict[str, str], remaining: List[str]) -> None:
        if not remaining:
            results.append(dict(mapping))
            return
        v = remaining[0]
        used = set(mapping.values())
        for w in verts:
            if w in used or sig[v] != sig[w]:
                continue
            ok = True
            for u, m in diagram.neighbors[v]:
                if u in mapping and diagram.edge_multiplicity(w, mapping[u]) != m:
                    ok = False
                    break
            if ok:
                mapping[v] = w
                extend(mapping, remaining[1:])
                del mapping[v]

    extend({"0": "0"}, others)
    return tuple(sorted(results, key=lambda m: tuple(m[v] for v in verts)))
