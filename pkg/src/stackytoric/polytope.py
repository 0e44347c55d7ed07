"""Exact convex polyhedra ``{eta : <a_i, eta> >= lambda_i}`` over Q(sqrt d)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import factorial
from typing import Sequence

from .errors import InputError, UnboundedError
from .field import ONE, ZERO, Scalar, as_scalar, common_field
from .linalg import Matrix, det, dot, rank, rref, solve, vec
from .simplex import simplex_std


class HPolytope:
    """Intersection of the half-spaces ``<normals[i], eta> >= offsets[i]``.

    Redundant rows are allowed.  Slices may carry zero rows ``0 >= lambda``
    which encode emptiness.
    """

    def __init__(self, dim: int, normals: Sequence[Sequence], offsets: Sequence,
                 check_normals: bool = True):
        self.dim = int(dim)
        self.normals = tuple(vec(a) for a in normals)
        self.offsets = tuple(as_scalar(x) for x in offsets)
        if len(self.normals) != len(self.offsets):
            raise InputError("normals and offsets differ in length",
                             normals=len(self.normals), offsets=len(self.offsets))
        if any(len(a) != self.dim for a in self.normals):
            raise InputError("normal vector length differs from the dimension", dim=self.dim)
        if check_normals:
            for i, a in enumerate(self.normals):
                if not any(a):
                    raise InputError("zero facet normal", facet=i)
        self.field_d = common_field([x for a in self.normals for x in a] + list(self.offsets))

    @property
    def nfacets(self) -> int:
        return len(self.normals)

    def __repr__(self):
        return f"HPolytope(dim={self.dim}, facets={self.nfacets})"

    def contains(self, eta: Sequence) -> bool:
        eta = vec(eta)
        return all(dot(a, eta) >= l for a, l in zip(self.normals, self.offsets))

    def residuals(self, eta: Sequence) -> tuple:
        eta = vec(eta)
        return tuple(dot(a, eta) - l for a, l in zip(self.normals, self.offsets))

    def add(self, normal: Sequence, offset) -> "HPolytope":
        return HPolytope(self.dim, self.normals + (vec(normal),), self.offsets + (as_scalar(offset),),
                         check_normals=False)

    @cached_property
    def _vertex_cache(self):
        return _vertices(self)


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "unbounded" | "infeasible"
    optimum: Scalar | None = None
    witness: tuple | None = None
    ray: tuple | None = None
    farkas: tuple | None = None

    def __bool__(self):
        return self.status == "optimal"


def lp_solve(P: HPolytope, objective: Sequence) -> LPResult:
    """Minimize ``<c, eta>`` over P exactly.

    Unbounded problems return a ray r with ``A r >= 0`` and ``<c, r> < 0``;
    infeasible ones a Farkas vector ``y >= 0`` with ``y A = 0``, ``y.lambda = 1``.
    """
    c = vec(objective)
    n, m = P.dim, P.nfacets
    # eta = p - q, A p - A q - s = lambda, all of p, q, s >= 0
    rows = [list(a) + [-x for x in a] + [-ONE if k == i else ZERO for k in range(m)]
            for i, a in enumerate(P.normals)]
    cost = list(c) + [-x for x in c] + [ZERO] * m
    res = simplex_std(rows, P.offsets, cost)
    if res.status == "optimal":
        eta = tuple(res.x[j] - res.x[n + j] for j in range(n))
        return LPResult("optimal", dot(c, eta), eta)
    if res.status == "unbounded":
        ray = tuple(res.ray[j] - res.ray[n + j] for j in range(n))
        return LPResult("unbounded", ray=ray)
    return LPResult("infeasible", farkas=farkas_witness(P))


def farkas_witness(P: HPolytope) -> tuple | None:
    """``y >= 0`` with ``sum y_i a_i = 0`` and ``sum y_i lambda_i = 1``, if one exists."""
    m, n = P.nfacets, P.dim
    rows = [[P.normals[i][j] for i in range(m)] for j in range(n)]
    rows.append(list(P.offsets))
    res = simplex_std(rows, [ZERO] * n + [ONE], [ZERO] * m)
    return res.x if res.status == "optimal" else None


def is_feasible(P: HPolytope) -> bool:
    return lp_solve(P, [ZERO] * P.dim).status == "optimal"


def recession_trivial(P: HPolytope) -> bool:
    """Is ``{r : A r >= 0}`` just ``{0}``?

    By Stiemke's alternative this holds iff A has full column rank and
    ``A^T y = 0`` for some ``y > 0``; after ``y = 1 + w`` that is one
    feasibility problem in ``w >= 0``.
    """
    n, m = P.dim, P.nfacets
    if n == 0:
        return True
    if m == 0 or rank(Matrix(P.normals, n)) < n:
        return False
    rows = [[P.normals[i][j] for i in range(m)] for j in range(n)]
    rhs = [-sum((P.normals[i][j] for i in range(m)), ZERO) for j in range(n)]
    return simplex_std(rows, rhs, [ZERO] * m).status == "optimal"


def check_bounded(P: HPolytope) -> bool:
    """False if some coordinate is unbounded on P; empty P counts as bounded."""
    return recession_trivial(P) or not is_feasible(P)


@dataclass(frozen=True)
class Vertex:
    point: tuple
    active: frozenset

    def as_dict(self) -> dict:
        return {"point": list(self.point), "active": sorted(self.active)}


def _vertices(P: HPolytope) -> tuple:
    if not check_bounded(P):
        raise UnboundedError("polytope is unbounded")
    n = P.dim
    if n == 0:
        if all(l <= 0 for l in P.offsets):
            return (Vertex((), frozenset(range(P.nfacets))),)
        return ()
    seen = {}
    live = [i for i, a in enumerate(P.normals) if any(a)]
    for combo in itertools.combinations(live, n):
        M = Matrix([P.normals[i] for i in combo], n)
        if rank(M) < n:
            continue
        x = solve(M, [P.offsets[i] for i in combo])
        if x is None or x in seen or not P.contains(x):
            continue
        seen[x] = frozenset(i for i, r in enumerate(P.residuals(x)) if r == 0)
    return tuple(Vertex(p, seen[p]) for p in sorted(seen))


def vertices(P: HPolytope) -> tuple[Vertex, ...]:
    """All vertices with their active facet sets, sorted lexicographically."""
    return P._vertex_cache


def irredundant_facets(P: HPolytope) -> list[int]:
    """Indices of facet-defining rows, one per distinct half-space."""
    keep = []
    seen = set()
    for i, (a, l) in enumerate(zip(P.normals, P.offsets)):
        if not any(a):
            continue
        s = abs(next(x for x in a if x))
        key = (tuple(x / s for x in a), l / s)
        if key not in seen:
            seen.add(key)
            keep.append(i)
    out = []
    for i in keep:
        others = [j for j in keep if j != i]
        Q = HPolytope(P.dim, [P.normals[j] for j in others], [P.offsets[j] for j in others],
                      check_normals=False)
        r = lp_solve(Q, P.normals[i])
        if r.status == "unbounded" or (r.status == "optimal" and r.optimum < P.offsets[i]):
            out.append(i)
    return out


def is_simple(P: HPolytope) -> bool:
    """Every vertex lies on exactly ``dim`` irredundant facets."""
    vs = vertices(P)
    irr = set(irredundant_facets(P))
    return all(len(v.active & irr) == P.dim for v in vs)


def slice_polytope(P: HPolytope, xi: Sequence, u) -> HPolytope:
    """``P`` intersected with ``<xi, eta> = u``, in the remaining coordinates.

    The coordinate eliminated is the leftmost j with ``xi_j != 0``; the
    others keep their order.  An infeasible slice keeps one row ``0 >= 1``.
    """
    xi = vec(xi)
    u = as_scalar(u)
    j = next((k for k, x in enumerate(xi) if x), None)
    if j is None:
        raise InputError("slice direction is zero")
    keep = [k for k in range(P.dim) if k != j]
    normals, offsets, empty = [], [], False
    for a, l in zip(P.normals, P.offsets):
        f = a[j] / xi[j]
        row = [a[k] - f * xi[k] for k in keep]
        rhs = l - f * u
        if any(row):
            normals.append(row)
            offsets.append(rhs)
        elif rhs > 0:
            empty = True
    if empty:
        normals.append([ZERO] * len(keep))
        offsets.append(ONE)
    return HPolytope(P.dim - 1, normals, offsets, check_normals=False)


def slice_lift(xi: Sequence, u, y: Sequence) -> tuple:
    """Point of the hyperplane ``<xi, eta> = u`` with slice coordinates y."""
    xi = vec(xi)
    j = next(k for k, x in enumerate(xi) if x)
    y = list(vec(y))
    rest = sum((xi[k] * y[k - (k > j)] for k in range(len(xi)) if k != j), ZERO)
    return tuple(y[:j]) + ((as_scalar(u) - rest) / xi[j],) + tuple(y[j:])


def affine_dimension(points: Sequence[Sequence]) -> int:
    if not points:
        return -1
    p0 = vec(points[0])
    diffs = [[x - y for x, y in zip(vec(p), p0)] for p in points[1:]]
    return rank(Matrix(diffs, len(p0))) if diffs else 0


def _simplices(face: frozenset, k: int, facet_sets, pts, memo) -> list[tuple]:
    """Fan triangulation of a k-face (as a vertex-id set) from its least vertex."""
    key = face
    if key in memo:
        return memo[key]
    if k == 0:
        out = [(min(face),)]
    else:
        base = min(face)
        subs = set()
        for S in facet_sets:
            F = face & S
            if base not in F and F not in subs and len(F) >= k and \
                    affine_dimension([pts[i] for i in sorted(F)]) == k - 1:
                subs.add(F)
        out = []
        for F in sorted(subs, key=sorted):
            out.extend((base,) + s for s in _simplices(F, k - 1, facet_sets, pts, memo))
    memo[key] = out
    return out


def volume(P: HPolytope) -> Scalar:
    """Exact volume of P in its affine hull.

    Lower-dimensional polytopes are projected onto the leftmost-pivot
    coordinates of their direction space; a single point has volume 1 and
    the empty set volume 0.
    """
    vs = vertices(P)
    if not vs:
        return ZERO
    pts = [v.point for v in vs]
    k = affine_dimension(pts)
    if k == 0:
        return ONE
    n = P.dim
    if k < n:
        p0 = pts[0]
        _, piv = rref(Matrix([[x - y for x, y in zip(p, p0)] for p in pts[1:]], n))
        pts = [tuple(p[j] for j in piv) for p in pts]
    ids = frozenset(range(len(vs)))
    facet_sets = {frozenset(i for i, v in enumerate(vs) if f in v.active) for f in range(P.nfacets)}
    facet_sets = [S for S in facet_sets if S and S != ids]
    total = ZERO
    for simp in _simplices(ids, k, facet_sets, pts, {}):
        p0 = pts[simp[0]]
        M = Matrix([[x - y for x, y in zip(pts[i], p0)] for i in simp[1:]], k)
        total = total + abs(det(M))
    return total / factorial(k)


def standard_simplex(n: int) -> HPolytope:
    normals = [[ONE if j == i else ZERO for j in range(n)] for i in range(n)] + [[-ONE] * n]
    return HPolytope(n, normals, [ZERO] * n + [-ONE])


def box(lower: Sequence, upper: Sequence) -> HPolytope:
    n = len(lower)
    normals, offsets = [], []
    for i in range(n):
        e = [ZERO] * n
        e[i] = ONE
        normals += [e, [-x for x in e]]
        offsets += [as_scalar(lower[i]), -as_scalar(upper[i])]
    return HPolytope(n, normals, offsets)
