"""Exact two-phase simplex method over Q(sqrt d) with Bland's rule."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .field import ONE, ZERO, Scalar, as_scalar


@dataclass
class StdResult:
    status: str  # "optimal" | "unbounded" | "infeasible"
    x: tuple | None = None
    value: Scalar | None = None
    ray: tuple | None = None


def _pivot(T: list[list[Scalar]], r: int, c: int) -> None:
    inv = T[r][c].inverse()
    T[r] = [x * inv for x in T[r]]
    for i in range(len(T)):
        if i != r and T[i][c]:
            f = T[i][c]
            T[i] = [x - f * y for x, y in zip(T[i], T[r])]


def _run(T, basis, cost_row, allowed) -> int | None:
    """Minimize with the reduced costs in ``T[cost_row]``.

    Returns None at optimality or the entering column of an unbounded ray.
    """
    m = cost_row
    while True:
        enter = next((j for j in allowed if T[m][j] < 0), None)
        if enter is None:
            return None
        best, leave = None, None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return enter
        _pivot(T, leave, enter)
        basis[leave] = enter


def simplex_std(A: Sequence[Sequence], b: Sequence, c: Sequence) -> StdResult:
    """Minimize ``c.x`` subject to ``A x = b`` and ``x >= 0``."""
    A = [[as_scalar(x) for x in row] for row in A]
    b = [as_scalar(x) for x in b]
    c = [as_scalar(x) for x in c]
    m, n = len(A), len(c)
    for i in range(m):
        if b[i] < 0:
            A[i] = [-x for x in A[i]]
            b[i] = -b[i]
    # phase I tableau: columns x (n), artificials (m), rhs
    T = [A[i] + [ONE if k == i else ZERO for k in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    cost1 = [ZERO] * (n + m + 1)
    for i in range(m):
        cost1 = [x - y for x, y in zip(cost1, T[i])]
        cost1[n + i] = ZERO
    T.append(cost1)
    _run(T, basis, m, list(range(n)))
    if T[m][-1] != 0:
        return StdResult("infeasible")
    # drive artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(basis):
        if basis[i] >= n:
            j = next((j for j in range(n) if T[i][j]), None)
            if j is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, i, j)
            basis[i] = j
        i += 1
    m = len(basis)
    T = [row[:n] + [row[-1]] for row in T[:m]]
    cost = list(c) + [ZERO]
    for i, j in enumerate(basis):
        if cost[j]:
            f = cost[j]
            cost = [x - f * y for x, y in zip(cost, T[i])]
    T.append(cost)
    enter = _run(T, basis, m, list(range(n)))
    if enter is not None:
        ray = [ZERO] * n
        ray[enter] = ONE
        for i, j in enumerate(basis):
            ray[j] = -T[i][enter]
        return StdResult("unbounded", ray=tuple(ray))
    x = [ZERO] * n
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    value = sum((ci * xi for ci, xi in zip(c, x)), ZERO)
    return StdResult("optimal", x=tuple(x), value=value)
