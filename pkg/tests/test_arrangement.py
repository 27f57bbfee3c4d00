"""Restricted root arrangements: walls, Whitney counts and sign vectors."""

from __future__ import annotations

import itertools
import random

import pytest

from conftest import sweep_configurations
from knitchambers import (DynkinType, ResourceBudgetError, build_diagram,
                          count_regions, positive_roots, restricted_walls,
                          sign_vectors)
from knitchambers.arrangement import RestrictedArrangement
from knitchambers.linalg import int_rank, normalize_covector


def walls_of(name: str, retained) -> RestrictedArrangement:
    d = build_diagram(DynkinType.parse(name))
    return restricted_walls(d, tuple(retained))


def brute_force_region_count(arr: RestrictedArrangement) -> int:
    """Direct subset enumeration of the Whitney sum (small inputs only)."""
    covs = arr.covectors
    total = 0
    for size in range(len(covs) + 1):
        for subset in itertools.combinations(covs, size):
            rank = int_rank(subset) if subset else 0
            total += (-1) ** (size - rank)
    return total


class TestRestrictedWalls:
    def test_e7_b2_d_exact(self):
        arr = walls_of("E7", ("5", "3"))
        assert set(arr.covectors) == {(1, 0), (0, 1), (1, 1), (2, 3), (1, 2), (1, 3)}

    def test_full_retention_is_all_roots(self):
        arr = walls_of("A2", ("1", "2"))
        assert set(arr.covectors) == set(positive_roots(DynkinType("A", 2)))

    def test_e6_131_exact(self):
        arr = walls_of("E6", ("1", "5", "3"))
        assert set(arr.covectors) == {
            (1, 0, 0), (0, 1, 0), (0, 0, 1),
            (1, 0, 1), (1, 0, 2), (0, 1, 1), (0, 1, 2),
            (1, 1, 1), (1, 1, 2), (1, 1, 3),
        }

    def test_d4_121_exact(self):
        arr = walls_of("D4", ("f1", "f2", "h2"))
        assert set(arr.covectors) == {
            (1, 0, 0), (0, 1, 0), (0, 0, 1),
            (1, 0, 1), (0, 1, 1), (1, 1, 1), (1, 1, 2),
        }

    def test_d4_outer_symmetric_seven(self):
        arr = walls_of("D4", ("f1", "f2", "f3"))
        assert set(arr.covectors) == {
            (1, 0, 0), (0, 1, 0), (0, 0, 1),
            (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1),
        }

    def test_covectors_are_primitive_and_pairwise_nonproportional(self):
        for cfg in sweep_configurations()[::9]:
            arr = restricted_walls(cfg.diagram, cfg.slots)
            assert len(set(arr.covectors)) == len(arr.covectors)
            for c in arr.covectors:
                assert normalize_covector(c) == c


class TestCountRegions:
    def test_empty_arrangement(self):
        assert count_regions(RestrictedArrangement(3, ())) == 1

    def test_single_hyperplane(self):
        assert count_regions(RestrictedArrangement(1, ((1,),))) == 2

    def test_e7_b2_d_is_12(self):
        assert count_regions(walls_of("E7", ("5", "3"))) == 12

    def test_d4_outer_is_32(self):
        assert count_regions(walls_of("D4", ("f1", "f2", "f3"))) == 32

    def test_d4_121_is_32(self):
        assert count_regions(walls_of("D4", ("f1", "f2", "h2"))) == 32

    def test_e6_131_is_60(self):
        assert count_regions(walls_of("E6", ("1", "5", "3"))) == 60

    def test_weyl_counts_full_retention(self):
        assert count_regions(walls_of("A2", ("1", "2"))) == 6
        assert count_regions(walls_of("A3", ("1", "2", "3"))) == 24
        assert count_regions(walls_of("D4", ("f1", "f2", "f3", "h2"))) == 192

    def test_matches_bruteforce_subset_sum(self):
        cases = [
            walls_of("E7", ("5", "3")),
            walls_of("D4", ("f1", "f2", "f3")),
            walls_of("E6", ("1", "3")),
            walls_of("E6", ("1", "5", "3")),
            walls_of("D4", ("f1", "f2", "f3", "h2")),
        ]
        for arr in cases:
            assert count_regions(arr) == brute_force_region_count(arr)

    def test_budget_error_above_24(self):
        arr = walls_of("E8", ("3", "5", "7", "8"))
        assert len(arr.covectors) > 24
        with pytest.raises(ResourceBudgetError):
            count_regions(arr)
        with pytest.raises(ResourceBudgetError):
            sign_vectors(arr)

    def test_deleting_a_covector_never_increases_count(self):
        arr = walls_of("E6", ("1", "5", "3"))
        full = count_regions(arr)
        for drop in range(len(arr.covectors)):
            covs = tuple(c for i, c in enumerate(arr.covectors) if i != drop)
            assert count_regions(RestrictedArrangement(arr.dim, covs)) <= full


class TestSignVectors:
    def test_one_covector_two_regions(self):
        assert sign_vectors(RestrictedArrangement(1, ((1,),))) == {(1,), (-1,)}

    def test_braid_a2(self):
        arr = walls_of("A2", ("1", "2"))
        assert len(sign_vectors(arr)) == 6

    def test_d4_full_retention_192(self):
        arr = walls_of("D4", ("f1", "f2", "f3", "h2"))
        assert len(sign_vectors(arr)) == 192

    def test_counts_agree_on_sweep_sample(self):
        rng = random.Random(2024)
        sample = rng.sample(sweep_configurations(), 60)
        for cfg in sample:
            arr = restricted_walls(cfg.diagram, cfg.slots)
            if len(arr.covectors) > 14:
                continue
            assert count_regions(arr) == len(sign_vectors(arr))


class TestInvariance:
    def test_count_invariant_under_slot_permutation(self):
        base = walls_of("E6", ("1", "5", "3"))
        n = count_regions(base)
        for perm in itertools.permutations(("1", "5", "3")):
            assert count_regions(walls_of("E6", perm)) == n

    def test_count_invariant_under_diagram_automorphism(self):
        # E6 arm swap maps (1, 3) to (5, 3)
        assert (count_regions(walls_of("E6", ("1", "3")))
                == count_regions(walls_of("E6", ("5", "3"))))
        # D4 leaf permutations
        assert (count_regions(walls_of("D4", ("f1", "h2")))
                == count_regions(walls_of("D4", ("f3", "h2"))))
