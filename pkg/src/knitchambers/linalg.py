"""Exact rational linear algebra: primitive covectors, unimodular matrix
inverses, and Fourier-Motzkin feasibility for strict homogeneous systems.

Everything is over Z / Q; no floats appear anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

IntVec = Tuple[int, ...]
IntMat = Tuple[IntVec, ...]


def normalize_covector(c: Sequence[int]) -> IntVec:
    """Scale to primitive integer form with the first nonzero entry positive."""
    c = tuple(int(x) for x in c)
    g = 0
    for x in c:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero covector cannot be normalized")
    c = tuple(x // g for x in c)
    for x in c:
        if x != 0:
            return c if x > 0 else tuple(-y for y in c)
    raise AssertionError("unreachable")


def _reduce_row(row: IntVec) -> IntVec:
    g = 0
    for x in row:
        g = gcd(g, abs(x))
    return row if g in (0, 1) else tuple(x // g for x in row)


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def mat_mul(a: IntMat, b: IntMat) -> IntMat:
    n, k, m = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m))
        for i in range(n)
    )


def identity(n: int) -> IntMat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_det(a: IntMat) -> int:
    """Exact integer determinant via fraction-free (Bareiss) elimination."""
    n = len(a)
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def mat_inv_unimodular(a: IntMat) -> IntMat:
    """Inverse of an integer matrix with determinant +/-1 (integer output)."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = []
    for i in range(n):
        row = aug[i][n:]
        assert all(x.denominator == 1 for x in row), "matrix is not unimodular"
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def int_rank(rows: Iterable[Sequence[int]]) -> int:
    """Rank over Q of integer rows, by fraction-free elimination."""
    work = [list(r) for r in rows if any(r)]
    rank = 0
    col = 0
    width = len(work[0]) if work else 0
    while work and col < width:
        piv = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        work[rank], work[piv] = work[piv], work[rank]
        lead = work[rank][col]
        for i in range(rank + 1, len(work)):
            if work[i][col] != 0:
                f = work[i][col]
                work[i] = [x * lead - f * y for x, y in zip(work[i], work[rank])]
        rank += 1
        col += 1
    return rank


def _eliminate(rows: List[IntVec], var: int) -> Optional[List[IntVec]]:
    """One Fourier-Motzkin step on strict rows ``r . x > 0``.

    Returns the projected system without ``var``, or None when the
    combination ``0 > 0`` is derived (infeasible).
    """
    pos, neg, zero = [], [], []
    for r in rows:
        (pos if r[var] > 0 else neg if r[var] < 0 else zero).append(r)
    out: Dict[IntVec, None] = {}
    for r in zero:
        out[r] = None
    for p in pos:
        for q in neg:
            comb = tuple(p[var] * q[j] - q[var] * p[j] for j in range(len(p)))
            if not any(comb):
                return None
            out[_reduce_row(comb)] = None
    return list(out.keys())


def find_interior(rows: Sequence[Sequence[int]], dim: int) -> Optional[Tuple[Fraction, ...]]:
    """A rational point with ``r . x > 0`` for every row, or None.

    Strict homogeneous systems only; uses Fourier-Motzkin elimination with
    back-substitution for the witness.
    """
    sys_rows = []
    for r in rows:
        r = tuple(int(x) for x in r)
        if not any(r):
            return None
        sys_rows.append(_reduce_row(r))
    levels: List[List[IntVec]] = [list(dict.fromkeys(sys_rows))]
    for var in range(dim - 1, 0, -1):
        nxt = _eliminate(levels[-1], var)
        if nxt is None:
            return None
        levels.append(nxt)
    # levels[k] constrains variables 0..dim-1-k; reconstruct back to front.
    point: List[Fraction] = [Fraction(0)] * dim
    base = levels[-1]
    if any(r[0] > 0 for r in base) and any(r[0] < 0 for r in base):
        return None
    point[0] = Fraction(-1) if any(r[0] < 0 for r in base) else Fraction(1)
    for var in range(1, dim):
        level = levels[dim - 1 - var]
        lower: Optional[Fraction] = None
        upper: Optional[Fraction] = None
        for r in level:
            if r[var] == 0:
                continue
            rest = sum(Fraction(r[j]) * point[j] for j in range(var))
            bound = -rest / r[var]
            if r[var] > 0:
                lower = bound if lower is None else max(lower, bound)
            else:
                upper = bound if upper is None else min(upper, bound)
        if lower is not None and upper is not None:
            if not lower < upper:
                return None
            point[var] = (lower + upper) / 2
        elif lower is not None:
            point[var] = lower + 1
        elif upper is not None:
            point[var] = upper - 1
    return tuple(point)


def feasible_strict(rows: Sequence[Sequence[int]], dim: int) -> bool:
    return find_interior(rows, dim) is not None


def facet_interior_exists(eq: Sequence[int], strict_rows: Sequence[Sequence[int]],
                          dim: int) -> bool:
    """Whether ``{x : eq . x = 0}`` meets the open cone of ``strict_rows``
    in a relatively open (dim-1)-dimensional set."""
    eq = tuple(int(x) for x in eq)
    j = next(i for i, x in enumerate(eq) if x != 0)
    sgn = 1 if eq[j] > 0 else -1
    reduced = []
    for r in strict_rows:
        comb = tuple(sgn * (r[t] * eq[j] - r[j] * eq[t])
                     for t in range(dim) if t != j)
        if not any(comb):
            return False
        reduced.append(_reduce_row(comb))
    if dim == 1:
        return True
    return feasible_strict(reduced, dim - 1)
