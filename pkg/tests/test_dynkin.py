"""Diagram data, multiplicities and positive roots."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from conftest import SWEEP_TYPES
from knitchambers import (ConfigurationError, DynkinType, InvalidDiagramError,
                          automorphisms, build_diagram, highest_root,
                          induced_dual_graph, positive_roots)
from knitchambers.dynkin import _cartan_matrix, root_support_connected


def classical_root_count(dtype: DynkinType) -> int:
    n = dtype.rank
    if dtype.family == "A":
        return n * (n + 1) // 2
    if dtype.family == "D":
        return n * (n - 1)
    return {6: 36, 7: 63, 8: 120}[n]


def test_only_listed_types_construct():
    DynkinType("A", 1)
    DynkinType("D", 4)
    DynkinType("E", 8)
    for family, rank in [("A", 0), ("D", 3), ("E", 5), ("E", 9), ("B", 2)]:
        with pytest.raises(InvalidDiagramError):
            DynkinType(family, rank)
    with pytest.raises(InvalidDiagramError):
        DynkinType.parse("F4")


def test_a1_double_edge():
    d = build_diagram(DynkinType("A", 1))
    assert d.vertices == ("0", "1")
    assert d.edges == (("0", "1", 2),)
    assert d.delta == {"0": 1, "1": 1}


def test_d5_shape_and_delta():
    d = build_diagram(DynkinType("D", 5))
    assert set(d.vertices) == {"0", "f1", "h2", "h3", "f2", "f3"}
    assert [d.delta[v] for v in ("0", "f1", "h2", "h3", "f2", "f3")] == [1, 1, 2, 2, 1, 1]
    assert d.edge_multiplicity("0", "h2") == 1
    assert d.edge_multiplicity("f2", "h3") == 1
    assert d.edge_multiplicity("0", "h3") == 0


def test_e7_delta_chain():
    d = build_diagram(DynkinType("E", 7))
    chain = [d.delta[str(i)] for i in range(0, 7)]
    assert chain == [1, 2, 3, 4, 3, 2, 1]
    assert d.delta["7"] == 2
    assert d.edge_multiplicity("3", "7") == 1


def test_e8_highest_multiplicity():
    d = build_diagram(DynkinType("E", 8))
    assert max(d.delta.values()) == 6
    assert len(d.vertices) == 9


@pytest.mark.parametrize("dtype", SWEEP_TYPES, ids=str)
def test_null_vector_identity(dtype):
    d = build_diagram(dtype)
    for v in d.finite_vertices:
        assert 2 * d.delta[v] == sum(m * d.delta[w] for w, m in d.neighbors[v])
    # removing vertex 0 leaves a tree (or an isolated vertex for A1)
    fin_edges = [(u, v) for u, v, _ in d.edges if u != "0" and v != "0"]
    assert len(fin_edges) == len(d.finite_vertices) - 1


@pytest.mark.parametrize("dtype", SWEEP_TYPES, ids=str)
def test_root_counts_match_classical(dtype):
    assert len(positive_roots(dtype)) == classical_root_count(dtype)


@pytest.mark.parametrize("dtype", SWEEP_TYPES, ids=str)
def test_roots_against_bruteforce_norm_condition(dtype):
    """Independent oracle: vectors 0 <= v <= highest root with v^T C v = 2."""
    d = build_diagram(dtype)
    C = np.array(_cartan_matrix(d), dtype=np.int64)
    top = highest_root(dtype)
    grid = np.array(list(itertools.product(*[range(c + 1) for c in top])),
                    dtype=np.int64)
    norms = np.einsum("ij,jk,ik->i", grid, C, grid)
    brute = {tuple(int(x) for x in row) for row in grid[norms == 2]}
    assert set(positive_roots(dtype)) == brute


def test_a2_roots_explicit():
    assert set(positive_roots(DynkinType("A", 2))) == {(1, 0), (0, 1), (1, 1)}


def test_d4_has_12_roots():
    assert len(positive_roots(DynkinType("D", 4))) == 12


def test_e7_has_63_roots():
    assert len(positive_roots(DynkinType("E", 7))) == 63


@pytest.mark.parametrize("dtype", SWEEP_TYPES, ids=str)
def test_highest_root_is_delta_and_supports_connected(dtype):
    d = build_diagram(dtype)
    roots = positive_roots(dtype)
    assert highest_root(dtype) in roots
    for root in roots:
        assert root_support_connected(d, root)


@pytest.mark.parametrize("dtype", SWEEP_TYPES, ids=str)
def test_automorphisms_permute_roots(dtype):
    d = build_diagram(dtype)
    roots = set(positive_roots(dtype))
    autos = automorphisms(d)
    assert any(all(m[v] == v for v in d.vertices) for m in autos)
    pos = {v: i for i, v in enumerate(d.finite_vertices)}
    for m in autos:
        perm = [pos[m[v]] for v in d.finite_vertices]
        mapped = {tuple(r[perm.index(i)] for i in range(len(r))) for r in roots}
        assert mapped == roots


def test_expected_automorphism_counts():
    assert len(automorphisms(build_diagram(DynkinType("D", 4)))) == 6
    assert len(automorphisms(build_diagram(DynkinType("D", 5)))) == 2
    assert len(automorphisms(build_diagram(DynkinType("A", 3)))) == 2
    assert len(automorphisms(build_diagram(DynkinType("E", 6)))) == 2
    assert len(automorphisms(build_diagram(DynkinType("E", 7)))) == 1


def test_induced_dual_graph_d4_outer():
    d = build_diagram(DynkinType("D", 4))
    g = induced_dual_graph(d, ("f1", "f2", "f3"))
    assert g.vertices == ("f1", "f2", "f3")
    assert g.edges == frozenset()
    assert g.delta == (1, 1, 1)


def test_induced_dual_graph_full_is_tree():
    for dtype in SWEEP_TYPES:
        d = build_diagram(dtype)
        g = induced_dual_graph(d, d.finite_vertices)
        assert len(g.edges) == len(g.vertices) - 1


def test_induced_dual_graph_e7_b2_d_isolated():
    d = build_diagram(DynkinType("E", 7))
    g = induced_dual_graph(d, ("5", "3"))  # B2 and D
    assert g.edges == frozenset()
    assert sorted(g.delta) == [2, 4]


def test_induced_dual_graph_rejects_bad_vertices():
    d = build_diagram(DynkinType("D", 4))
    with pytest.raises(ConfigurationError):
        induced_dual_graph(d, ("0", "f1"))
    with pytest.raises(ConfigurationError):
        induced_dual_graph(d, ("f1", "nope"))
    with pytest.raises(ConfigurationError):
        induced_dual_graph(d, ("f1", "f1"))
