"""Independent oracle: the restricted root hyperplane arrangement and its
exact region count.

Two unlike algorithms guard each other: the Whitney subset sum
sum over B of (-1)^(|B| - rank B) counts regions of the central
arrangement, and sign-vector enumeration lists them by exact rational
feasibility.  Both are budgeted at 24 hyperplanes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .dynkin import DynkinDiagram, positive_roots, validate_retained
from .errors import ResourceBudgetError
from .linalg import IntVec, dot, find_interior, normalize_covector

HYPERPLANE_BUDGET = 24

SignVector = Tuple[int, ...]


@dataclass(frozen=True)
class RestrictedArrangement:
    """Deduplicated sign-normalized primitive covectors obtained by
    restricting the positive roots to the retained coordinate slots."""

    dim: int
    covectors: Tuple[IntVec, ...]

    def __post_init__(self):
        assert all(any(c) for c in self.covectors)


def restricted_walls(diagram: DynkinDiagram, retained: Sequence[str]) -> RestrictedArrangement:
    """Covectors of positive roots at the retained vertices; roots supported
    entirely on contracted vertices restrict to zero and are dropped."""
    retained = tuple(retained)
    validate_retained(diagram, retained)
    pos = {v: i for i, v in enumerate(diagram.finite_vertices)}
    cols = [pos[v] for v in retained]
    seen = set()
    for root in positive_roots(diagram.dtype):
        c = tuple(root[j] for j in cols)
        if any(c):
            seen.add(normalize_covector(c))
    return RestrictedArrangement(dim=len(retained), covectors=tuple(sorted(seen)))


def _check_budget(arr: RestrictedArrangement, op: str) -> None:
    if len(arr.covectors) > HYPERPLANE_BUDGET:
        raise ResourceBudgetError(
            f"{op}: {len(arr.covectors)} hyperplanes exceed the subset-sum "
            f"budget of {HYPERPLANE_BUDGET}; rerun without the oracle or "
            f"reduce the configuration"
        )


def _span_insert(span: Tuple[IntVec, ...], vec: IntVec) -> Optional[Tuple[IntVec, ...]]:
    """Insert ``vec`` into a reduced-echelon integer row basis; None if
    dependent.  The canonical form makes row spaces comparable."""
    row = list(vec)
    width = len(row)
    for basis_row in span:
        lead = next(i for i, x in enumerate(basis_row) if x)
        if row[lead]:
            f = row[lead]
            g = basis_row[lead]
            row = [x * g - f * y for x, y in zip(row, basis_row)]
    if not any(row):
        return None
    row = normalize_covector(row)
    rows = list(span) + [row]
    # re-reduce upwards so the form stays canonical
    rows.sort(key=lambda r: next(i for i, x in enumerate(r) if x))
    for i in range(len(rows) - 1, -1, -1):
        lead = next(k for k, x in enumerate(rows[i]) if x)
        for j in range(i):
            if rows[j][lead]:
                f = rows[j][lead]
                g = rows[i][lead]
                rows[j] = normalize_covector(
                    [x * g - f * y for x, y in zip(rows[j], rows[i])]
                )
    return tuple(sorted(rows))


def count_regions(arr: RestrictedArrangement) -> int:
    """Exact number of open regions: Whitney sum over subsets B of the
    covectors of (-1)^(|B| - rank B), evaluated by a DFS that memoizes on
    the row space spanned so far (identical sum, no 2^n blowup)."""
    _check_budget(arr, "count_regions")
    covs = arr.covectors
    memo: Dict[Tuple[int, Tuple[IntVec, ...]], int] = {}

    def walk(i: int, span: Tuple[IntVec, ...]) -> int:
        if i == len(covs):
            return 1
        key = (i, span)
        cached = memo.get(key)
        if cached is not None:
            return cached
        bigger = _span_insert(span, covs[i])
        if bigger is None:
            # dependent: the include branch contributes -1 times the
            # exclude branch, so the two cancel exactly
            total = 0
        else:
            total = walk(i + 1, span) + walk(i + 1, bigger)
        memo[key] = total
        return total

    return walk(0, ())


def sign_vectors(arr: RestrictedArrangement) -> FrozenSet[SignVector]:
    """All sign assignments in {+1,-1}^covectors with a nonempty open
    region, by incremental exact feasibility with witness reuse."""
    _check_budget(arr, "sign_vectors")
    dim = arr.dim
    regions: List[Tuple[Tuple[int, ...], Tuple]] = [((), None)]
    for cov in arr.covectors:
        nxt: List[Tuple[Tuple[int, ...], Tuple]] = []
        for signs, witness in regions:
            prior = [tuple(s * x for x in c) for s, c in zip(signs, arr.covectors)]
            if witness is None:
                value = 0
            else:
                value = dot(cov, witness)
            for side in (1, -1):
                if witness is not None and side * value > 0:
                    nxt.append((signs + (side,), witness))
                    continue
                rows = prior + [tuple(side * x for x in cov)]
                point = find_interior(rows, dim)
                if point is not None:
                    nxt.append((signs + (side,), point))
        regions = nxt
    return frozenset(signs for signs, _ in regions)
