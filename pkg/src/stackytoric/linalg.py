"""Exact dense linear algebra over Q(sqrt d).

Vectors are tuples of :class:`~stackytoric.field.Scalar`; :class:`Matrix`
is an immutable row-major container.  All elimination uses leftmost pivots
so that bases returned here are canonical (reduced row echelon form).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .field import ONE, ZERO, Scalar, as_scalar, common_field

Vector = tuple  # tuple[Scalar, ...]


def vec(values: Iterable) -> Vector:
    return tuple(as_scalar(v) for v in values)


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    total = ZERO
    for x, y in zip(u, v):
        if x and y:
            total = total + x * y
    return total


class Matrix:
    """Immutable rectangular matrix of scalars."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(vec(r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        common_field(x for r in rows for x in r)
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, m: int, n: int) -> "Matrix":
        return cls([[ZERO] * n for _ in range(m)], n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int | None = None) -> "Matrix":
        if not cols:
            return cls([[] for _ in range(nrows or 0)], 0)
        return cls(list(zip(*cols)), len(cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def field_d(self) -> int:
        return common_field(x for r in self.rows for x in r)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.ncols)]

    @property
    def T(self) -> "Matrix":
        return Matrix.from_columns(self.rows, self.ncols) if self.rows else Matrix.zeros(self.ncols, 0)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = other.columns()
            return Matrix([[dot(r, c) for c in cols] for r in self.rows], other.ncols)
        v = vec(other)
        if len(v) != self.ncols:
            raise ValueError("shape mismatch in matrix-vector product")
        return tuple(dot(r, v) for r in self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix([[c * x for x in r] for r in self.rows], self.ncols)

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.rows]!r})"

    def tolist(self) -> list[list[Scalar]]:
        return [list(r) for r in self.rows]


def rref(M: Matrix) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form with leftmost pivots; returns (rows, pivot columns)."""
    A = [list(r) for r in M.rows]
    m, n = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = A[r][c].inverse()
        A[r] = [x * inv for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M: Matrix) -> int:
    return len(rref(M)[1])


@dataclass(frozen=True)
class KernelResult:
    rank: int
    kernel: tuple  # tuple of vectors with M v = 0
    row_space: tuple  # nonzero rows of the RREF


def rank_kernel_solve(M: Matrix) -> KernelResult:
    """Exact rank, kernel basis and canonical row-space basis."""
    R, piv = rref(M)
    n = M.ncols
    free = [j for j in range(n) if j not in piv]
    kernel = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for i, p in enumerate(piv):
            v[p] = -R[i][f]
        kernel.append(tuple(v))
    return KernelResult(len(piv), tuple(kernel), tuple(tuple(R[i]) for i in range(len(piv))))


def kernel(M: Matrix) -> tuple:
    return rank_kernel_solve(M).kernel


def solve(M: Matrix, b: Sequence) -> Vector | None:
    """One solution of ``M x = b`` (free variables zero), or None."""
    b = vec(b)
    aug = Matrix([list(r) + [bi] for r, bi in zip(M.rows, b)], M.ncols + 1)
    R, piv = rref(aug)
    if M.ncols in piv:
        return None
    x = [ZERO] * M.ncols
    for i, p in enumerate(piv):
        x[p] = R[i][M.ncols]
    return tuple(x)


def inverse(M: Matrix) -> Matrix:
    n = M.nrows
    if M.ncols != n:
        raise ValueError("inverse of a non-square matrix")
    aug = Matrix([list(r) + [ONE if i == j else ZERO for j in range(n)]
                  for i, r in enumerate(M.rows)], 2 * n)
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return Matrix([r[n:] for r in R], n)


def det(M: Matrix) -> Scalar:
    n = M.nrows
    if M.ncols != n:
        raise ValueError("determinant of a non-square matrix")
    A = [list(r) for r in M.rows]
    out = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            A[c], A[p] = A[p], A[c]
            out = -out
        piv = A[c][c]
        out = out * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] * inv
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return out


def flatten_rational(vectors: Sequence[Sequence[Scalar]]) -> list[list[Fraction]]:
    """Split each coordinate ``a + b sqrt d`` into two rational coordinates."""
    return [[q for x in v for q in (x.a, x.b)] for v in vectors]


def rational_rank(vectors: Sequence[Sequence[Scalar]]) -> int:
    """Dimension over Q of the Q-span of the vectors."""
    flat = flatten_rational(vectors)
    if not flat or not flat[0]:
        return 0
    return rank(Matrix(flat))


def discrete_subgroup_test(vectors: Sequence[Sequence]) -> bool:
    """True iff the subgroup of R^k generated by ``vectors`` is discrete.

    A finitely generated subgroup is discrete exactly when its Z-rank (the
    Q-dimension of its Q-span) equals the dimension of its real span.
    """
    vectors = [vec(v) for v in vectors]
    if not vectors or not vectors[0]:
        return True
    return rational_rank(vectors) == rank(Matrix(vectors))


def integer_row_scale(row: Sequence[Fraction]) -> list[int]:
    """Multiply a rational row by the lcm of its denominators."""
    m = lcm(*(Fraction(x).denominator for x in row)) if row else 1
    return [int(Fraction(x) * m) for x in row]
