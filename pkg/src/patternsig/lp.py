"""Exact phase-one simplex over the rationals.

Only feasibility is needed: find ``x >= 0`` with ``A x = b``. Bland's rule
keeps the method finite under degeneracy, which is the common case here
(most right-hand sides are zero).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)


def feasible_point(A: Sequence[Sequence], b: Sequence) -> tuple | None:
    """A nonnegative solution of ``A x = b`` in exact arithmetic, or None."""
    m = len(A)
    n = len(A[0]) if m else 0
    rows = []
    rhs = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        bi = Fraction(b[i])
        if bi < 0:
            row = [-v for v in row]
            bi = -bi
        rows.append(row + [Fraction(int(k == i)) for k in range(m)])
        rhs.append(bi)
    width = n + m
    basis = [n + i for i in range(m)]

    # phase-one cost: sum of artificials, priced out against the initial basis
    cost = [-sum((rows[i][j] for i in range(m)), ZERO) for j in range(n)] + [ZERO] * m
    obj = -sum(rhs, ZERO)

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            # unbounded direction; cannot happen for a phase-one objective bounded below by 0
            raise ArithmeticError("phase-one problem reported unbounded")
        piv = rows[leave][enter]
        rows[leave] = [v / piv for v in rows[leave]]
        rhs[leave] /= piv
        for i in range(m):
            if i != leave and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[leave])]
                rhs[i] -= f * rhs[leave]
        f = cost[enter]
        cost = [v - f * w for v, w in zip(cost, rows[leave])]
        obj -= f * rhs[leave]
        basis[leave] = enter

    if obj != 0:
        return None
    x = [ZERO] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = rhs[i]
    return tuple(x)


def simplex_point(n: int, constraints: Sequence[Sequence]) -> tuple | None:
    """A point q of the n-dimensional probability simplex with ``g . q >= 0`` for every row g."""
    r = len(constraints)
    A, b = [], []
    for k, g in enumerate(constraints):
        A.append(list(g) + [Fraction(-1) if j == k else ZERO for j in range(r)])
        b.append(ZERO)
    A.append([Fraction(1)] * n + [ZERO] * r)
    b.append(Fraction(1))
    x = feasible_point(A, b)
    return None if x is None else x[:n]
