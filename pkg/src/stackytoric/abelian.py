"""Integer matrices, Smith normal form and finitely generated abelian groups.

Integer matrices are plain lists of lists of Python ints.  The Smith form
comes with its unimodular transforms, so kernels and cokernels computed from
it carry certificates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod
from typing import Sequence

from .linalg import integer_row_scale

IntMatrix = list  # list[list[int]]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    if not A:
        return []
    inner = len(B)
    ncols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(ncols)]
            for i in range(len(A))]


def matvec(A: IntMatrix, v: Sequence[int]) -> list[int]:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def transpose(A: IntMatrix, ncols: int | None = None) -> IntMatrix:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(c) for c in zip(*A)]


def int_det(A: IntMatrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            p = next((i for i in range(k + 1, n) if M[i][k]), None)
            if p is None:
                return 0
            M[k], M[p] = M[p], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def smith_normal_form(M: IntMatrix, ncols: int | None = None):
    """Return ``(U, S, V)`` with ``U M V = S`` diagonal and ``d1 | d2 | ...``.

    ``U`` and ``V`` are unimodular; diagonal entries are non-negative.
    ``ncols`` is only needed when ``M`` has no rows.
    """
    m = len(M)
    n = len(M[0]) if m else (ncols or 0)
    A = [list(map(int, r)) for r in M]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in A:
            R[i], R[j] = R[j], R[i]
        for R in V:
            R[i], R[j] = R[j], R[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for R in A:
            R[dst] += q * R[src]
        for R in V:
            R[dst] += q * R[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return U, A, V
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    clean = clean and A[t][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(t + 1, m)
                        if any(A[i][j] % p for j in range(t + 1, n))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return U, A, V


def diagonal(S: IntMatrix) -> list[int]:
    return [S[i][i] for i in range(min(len(S), len(S[0]) if S else 0))]


def integer_kernel(M: Sequence[Sequence], ncols: int | None = None) -> list[list[int]]:
    """Z-basis of ``{v in Z^n : M v = 0}`` for a rational matrix ``M``."""
    rows = [integer_row_scale([Fraction(x) for x in r]) for r in M]
    rows = [r for r in rows if any(r)]
    n = len(M[0]) if M else (ncols or 0)
    if not rows:
        return identity(n)
    U, S, V = smith_normal_form(rows)
    r = sum(1 for x in diagonal(S) if x)
    return [[V[i][j] for i in range(n)] for j in range(r, n)]


def integer_solve(M: IntMatrix, b: Sequence[int], ncols: int | None = None) -> list[int] | None:
    """An integer solution of ``M x = b`` or None."""
    m = len(M)
    n = len(M[0]) if m else (ncols or 0)
    if m == 0:
        return [0] * n
    U, S, V = smith_normal_form(M)
    c = matvec(U, b)
    y = [0] * n
    for i in range(m):
        s = S[i][i] if i < n else 0
        if s == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % s:
                return None
            y[i] = c[i] // s
    return matvec(V, y)


def index_of_span(vectors: Sequence[Sequence[int]], n: int) -> int | None:
    """Index of the Z-span of ``vectors`` in Z^n, or None if it is infinite."""
    if not vectors:
        return 1 if n == 0 else None
    cols = transpose([list(v) for v in vectors])
    _, S, _ = smith_normal_form(cols)
    diag = diagonal(S)
    if len(diag) < n or any(x == 0 for x in diag[:n]):
        return None
    return prod(diag[:n])


@dataclass(frozen=True)
class FgAbelianGroup:
    """``Z^generators`` modulo the span of the relation vectors.

    Each relation is an integer vector of length ``generators``.
    """

    generators: int
    relations: tuple = field(default=())

    def __post_init__(self):
        rels = tuple(tuple(int(x) for x in r) for r in self.relations)
        if any(len(r) != self.generators for r in rels):
            raise ValueError("relation vector length differs from generator count")
        object.__setattr__(self, "relations", rels)

    def relation_matrix(self) -> IntMatrix:
        return [list(r) for r in self.relations]

    def invariants(self) -> tuple[int, tuple[int, ...]]:
        return group_invariants(self)

    def contains_relation_span(self, v: Sequence[int]) -> bool:
        """Is ``v`` zero in the group (i.e. in the span of the relations)?"""
        if not any(v):
            return True
        if not self.relations:
            return False
        return integer_solve(transpose(self.relation_matrix()), list(v)) is not None

    def is_trivial(self) -> bool:
        rank, torsion = self.invariants()
        return rank == 0 and not torsion

    def order(self) -> int | None:
        rank, torsion = self.invariants()
        return None if rank else prod(torsion)

    def __str__(self):
        rank, torsion = self.invariants()
        parts = [f"Z/{t}" for t in torsion] + ["Z"] * rank
        return " + ".join(parts) if parts else "0"


def group_invariants(G: FgAbelianGroup) -> tuple[int, tuple[int, ...]]:
    """(free rank, torsion coefficients) via Smith form of the relations."""
    if not G.relations:
        return G.generators, ()
    _, S, _ = smith_normal_form(G.relation_matrix())
    diag = [x for x in diagonal(S) if x]
    return G.generators - len(diag), tuple(x for x in diag if x > 1)


def subgroup_quotient(basis: Sequence[Sequence[int]], relations: Sequence[Sequence[int]]) -> FgAbelianGroup:
    """The group ``span(basis) / span(relations)``.

    ``basis`` must be a Z-basis of a saturated-or-not lattice containing every
    relation; relations are re-expressed in basis coordinates.
    """
    k = len(basis)
    if k == 0:
        return FgAbelianGroup(0)
    B = transpose([list(b) for b in basis])  # n x k
    coords = []
    for r in relations:
        c = integer_solve(B, list(r))
        if c is None:
            raise ValueError("relation outside the given sublattice")
        coords.append(c)
    return FgAbelianGroup(k, tuple(tuple(c) for c in coords))


def gcd_list(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, int(v))
    return g
