from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.optimize import linprog
from scipy.spatial import ConvexHull

from stackytoric.errors import UnboundedError
from stackytoric.field import ONE, ZERO, Scalar, root
from stackytoric.linalg import Matrix, det, dot, inverse
from stackytoric.polytope import (HPolytope, affine_dimension, box, check_bounded,
                                  farkas_witness, irredundant_facets, is_feasible, is_simple,
                                  lp_solve, slice_lift, slice_polytope, standard_simplex,
                                  vertices, volume)
from stackytoric.simplex import simplex_std


def random_polytope(rng, dim, extra):
    """A box [-3, 3]^dim cut by random integer half-spaces through a ball around 0."""
    P = box([-3] * dim, [3] * dim)
    for _ in range(extra):
        a = [int(x) for x in rng.integers(-4, 5, dim)]
        if any(a):
            P = P.add(a, -int(rng.integers(1, 8)))
    return P


def as_float(P):
    A = np.array([[float(x) for x in a] for a in P.normals])
    b = np.array([float(x) for x in P.offsets])
    return A, b


def test_simplex_std_small_problem():
    # min -x - y, x + y + s = 1
    res = simplex_std([[1, 1, 1]], [1], [-1, -1, 0])
    assert res.status == "optimal" and res.value == -1
    assert simplex_std([[1, -1]], [1], [0, -1]).status == "unbounded"
    assert simplex_std([[1, 1]], [-1], [0, 0]).status == "infeasible"


def test_lp_statuses_and_certificates():
    P = HPolytope(2, [[1, 0], [0, 1]], [0, 0])
    r = lp_solve(P, [-1, 0])
    assert r.status == "unbounded"
    assert all(dot(a, r.ray) >= 0 for a in P.normals) and dot([-1, 0], r.ray) < 0
    E = HPolytope(1, [[1], [-1]], [1, 0])
    r = lp_solve(E, [1])
    assert r.status == "infeasible"
    y = r.farkas
    assert all(x >= 0 for x in y)
    assert sum((yi * a[0] for yi, a in zip(y, E.normals)), ZERO) == 0
    assert sum((yi * l for yi, l in zip(y, E.offsets)), ZERO) == 1
    assert not is_feasible(E) and farkas_witness(P) is None


@pytest.mark.parametrize("seed", range(20))
def test_lp_matches_scipy(seed):
    rng = np.random.default_rng(seed)
    dim = int(rng.integers(1, 4))
    P = random_polytope(rng, dim, 4)
    c = [int(x) for x in rng.integers(-5, 6, dim)]
    A, b = as_float(P)
    ref = linprog(np.array(c, float), A_ub=-A, b_ub=-b, bounds=[(None, None)] * dim)
    ours = lp_solve(P, c)
    assert ref.status == 0 and ours.status == "optimal"
    assert float(ours.optimum) == pytest.approx(ref.fun, abs=1e-7)


def test_triangle_vertices_and_volume():
    T = HPolytope(2, [[1, 0], [0, 1], [-1, -1]], [0, 0, -1])
    pts = [v.point for v in vertices(T)]
    assert pts == [(0, 0), (0, 1), (1, 0)]
    assert volume(T) == Fraction(1, 2)
    assert is_simple(T)


def test_simplex_volumes():
    for n, expected in ((1, 1), (2, Fraction(1, 2)), (3, Fraction(1, 6)), (4, Fraction(1, 24))):
        assert volume(standard_simplex(n)) == expected


def test_pyramid_is_not_simple():
    # square pyramid with apex over the center of [-1, 1]^2
    P = HPolytope(3, [[0, 0, 1], [-1, 0, -1], [1, 0, -1], [0, -1, -1], [0, 1, -1]],
                  [0, -1, -1, -1, -1])
    assert not is_simple(P)
    assert volume(P) == Fraction(4, 3)


def test_irrational_interval():
    r = root(2)
    P = HPolytope(1, [[1], [-r]], [0, -r])
    assert [v.point for v in vertices(P)] == [(ZERO,), (ONE,)]
    assert volume(P) == 1


def test_redundant_rows_are_dropped():
    P = box([0, 0], [1, 1]).add([2, 0], 0).add([1, 1], -5)
    assert sorted(irredundant_facets(P)) == [0, 1, 2, 3]


def test_unbounded_raises():
    with pytest.raises(UnboundedError):
        vertices(HPolytope(1, [[1]], [0]))
    assert not check_bounded(HPolytope(1, [[1]], [0]))


def test_degenerate_sets():
    point = HPolytope(1, [[1], [-1]], [0, 0])
    assert volume(point) == 1
    empty = HPolytope(1, [[1], [-1]], [1, 0])
    assert volume(empty) == 0 and vertices(empty) == ()
    # a segment inside R^2 measured in its affine hull
    seg = HPolytope(2, [[0, 1], [0, -1], [1, 0], [-1, 0]], [0, 0, 0, -3])
    assert affine_dimension([v.point for v in vertices(seg)]) == 1
    assert volume(seg) == 3


def test_slices():
    T = HPolytope(2, [[1, 0], [0, 1], [-1, -1]], [0, 0, -1])
    S = slice_polytope(T, [1, 0], Fraction(1, 4))
    assert volume(S) == Fraction(3, 4)
    assert slice_lift([1, 0], Fraction(1, 4), [Fraction(1, 2)]) == (Fraction(1, 4), Fraction(1, 2))
    assert volume(slice_polytope(T, [1, 0], 2)) == 0
    assert volume(slice_polytope(T, [1, 1], 1)) == 1  # measured in the y coordinate


@pytest.mark.parametrize("seed", range(12))
def test_volume_matches_convex_hull(seed):
    rng = np.random.default_rng(100 + seed)
    dim = int(rng.integers(2, 4))
    P = random_polytope(rng, dim, 3)
    pts = np.array([[float(x) for x in v.point] for v in vertices(P)])
    assert float(volume(P)) == pytest.approx(ConvexHull(pts).volume, rel=1e-9)


unimodular = st.sampled_from([[[1, 0], [0, 1]], [[1, 1], [0, 1]], [[2, 1], [1, 1]],
                              [[0, -1], [1, 0]], [[1, -2], [0, 1]], [[3, 2], [1, 1]]])


@given(unimodular, st.integers(-3, 3), st.integers(-3, 3))
def test_volume_is_affine_invariant(M, t1, t2):
    """vol(M P + t) = |det M| vol(P) with normals moved by M^-T."""
    P = HPolytope(2, [[1, 0], [0, 1], [-1, -2]], [0, 0, -2])
    Mm = Matrix(M)
    MinvT = inverse(Mm).T
    normals = [MinvT @ a for a in P.normals]
    t = (Scalar(t1), Scalar(t2))
    offsets = [l + dot(a2, t) for a2, l in zip(normals, P.offsets)]
    Q = HPolytope(2, normals, offsets)
    assert volume(Q) == abs(det(Mm)) * volume(P)
    moved = sorted(tuple(x + y for x, y in zip(Mm @ v.point, t)) for v in vertices(P))
    assert moved == [v.point for v in vertices(Q)]


@pytest.mark.parametrize("seed", range(25))
def test_boundedness_agrees_with_coordinate_lps(seed):
    rng = np.random.default_rng(500 + seed)
    dim = int(rng.integers(1, 4))
    normals = [[int(x) for x in rng.integers(-3, 4, dim)] for _ in range(int(rng.integers(1, 6)))]
    normals = [a for a in normals if any(a)] or [[1] * dim]
    P = HPolytope(dim, normals, [-1] * len(normals))  # contains 0, so feasible
    coordinatewise = all(lp_solve(P, [s * int(i == j) for i in range(dim)]).status == "optimal"
                         for j in range(dim) for s in (1, -1))
    assert check_bounded(P) == coordinatewise
