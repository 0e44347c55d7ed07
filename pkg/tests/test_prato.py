from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from stackytoric import catalog
from stackytoric.abelian import FgAbelianGroup, int_det, matvec
from stackytoric.crossedmod import QuasiLattice
from stackytoric.errors import InputError, PreconditionError, WallError
from stackytoric.field import ZERO, root
from stackytoric.linalg import Matrix, discrete_subgroup_test, inverse
from stackytoric.polytope import HPolytope
from stackytoric.prato import (SamplingConfig, StackyPolytope, analyze, build_prato_data,
                               classify, dh_scan, hypotheses_report, moment_image,
                               reduced_dimension, reduction_exists, regular_value_check,
                               shard_rng, slice_quasilattice, validate_stacky)

EXPECTED = {
    "rational-interval": "manifold",
    "interval-2": "orbifold",
    "quasi-interval": "quasifold",
    "triangle": "manifold",
    "square": "manifold",
    "weighted-triangle": "orbifold",
    "quasi-triangle": "quasifold",
    "quasi-square": "quasifold",
}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_classification(name):
    S = catalog.CATALOG[name]()
    D = build_prato_data(S)
    c = classify(D, S)
    assert c.kind == EXPECTED[name]
    # quasifold exactly when the image of A is not discrete (kernels here are finite)
    assert (c.kind == "quasifold") == (not discrete_subgroup_test(S.Q.boundary.columns()))


def test_vertex_indices():
    S = catalog.rational_interval(2)
    assert classify(build_prato_data(S), S).certificate["vertex_indices"] == [2, 2]
    S = catalog.weighted_triangle()
    assert classify(build_prato_data(S), S).certificate["vertex_indices"] == [1, 2, 1]


def test_prato_data_of_quasi_interval():
    S = catalog.quasi_interval()
    D = build_prato_data(S)
    r = root(2)
    assert D.k == 1
    (n,) = D.n_space
    # n spans the kernel of pi = (1, -sqrt 2)
    assert n[0] - r * n[1] == 0
    assert D.lam == (ZERO, -r)


def test_non_spanning_normals():
    Q = QuasiLattice(FgAbelianGroup(1), 2, Matrix([[1], [0]]))
    P = HPolytope(2, [[1, 0], [-1, 0]], [0, -1])
    S = StackyPolytope(Q, P, [(1,), (-1,)])
    rep = validate_stacky(S)
    assert not rep.valid and "image does not span E" in rep.problems
    with pytest.raises(InputError):
        build_prato_data(S)


def test_labels_must_hit_normals():
    S = catalog.triangle()
    bad = StackyPolytope(S.Q, S.P, [(1, 0), (0, 1), (1, 1)])
    assert not validate_stacky(bad).valid


def test_covers():
    S = catalog.rational_interval(2)
    assert classify(build_prato_data(S, "universal"), S).kind == "quasifold"  # Z kernel
    assert classify(build_prato_data(S, "full-preimage"), S).kind == "manifold"
    D = build_prato_data(S, "quotient", [(1, 1)])
    assert classify(D, S).kind == "manifold"
    with pytest.raises(InputError):
        build_prato_data(S, "quotient", [(1, 0)])


def test_regularity():
    S = catalog.point_polytope()
    D = build_prato_data(S)
    rep = regular_value_check(D, S.P)
    assert not rep.regular and rep.required_rank == 1
    assert not classify(D, S).certificate["regular_value"]
    with pytest.raises(PreconditionError):
        reduction_exists(D, S)
    T = catalog.triangle()
    assert regular_value_check(build_prato_data(T), T.P).regular


def test_hypotheses():
    S = catalog.quasi_triangle()
    h = hypotheses_report(build_prato_data(S), S)
    assert h["d_proper"] and h["a_regular"] and h["b_locally_free"]


def test_moment_image_of_quasi_interval():
    S = catalog.quasi_interval()
    D = build_prato_data(S)
    rep = moment_image(D, S.P, SamplingConfig(samples=2000, grid=Fraction(1, 20)))
    assert rep.ok and rep.image_equals_polytope
    assert rep.contained == rep.samples == 2000
    assert all(not any(v["residual"]) for v in rep.vertices)


def test_shard_streams_are_reproducible():
    a = shard_rng(7, 3).random(5)
    b = shard_rng(7, 3).random(5)
    c = shard_rng(7, 4).random(5)
    assert (a == b).all() and not (a == c).all()


def test_moment_image_is_seeded():
    S = catalog.triangle()
    D = build_prato_data(S)
    cfg = SamplingConfig(seed=11, samples=300, grid=Fraction(1, 10))
    assert moment_image(D, S.P, cfg).as_dict() == moment_image(D, S.P, cfg).as_dict()


def test_reduction_verdicts():
    for name in ("quasi-interval", "triangle", "weighted-triangle"):
        S = catalog.CATALOG[name]()
        assert reduction_exists(build_prato_data(S), S).exists


def test_reduced_dimension():
    S = catalog.quasi_interval()
    D = build_prato_data(S)
    out = reduced_dimension(D, S.P, [Fraction(1, 2)])
    assert out["reduced_dim"] == 0 and out["zero_fibre_dim"] == 3
    T = catalog.triangle()
    DT = build_prato_data(T)
    out = reduced_dimension(DT, T.P, [Fraction(1, 3)], xi=[[1, 0]])
    assert out["reduced_dim"] == 2 and out["slice_dim"] == 1
    with pytest.raises(WallError):
        reduced_dimension(DT, T.P, [1], xi=[[1, 0]])
    with pytest.raises(PreconditionError):
        reduced_dimension(DT, T.P, [2], xi=[[1, 0]])


def coeffs(ch):
    return [c for c in ch["coefficients"]]


def test_dh_triangle_and_square():
    T = catalog.triangle()
    rep = dh_scan(build_prato_data(T), T, [1, 0])
    assert rep.ok and rep.walls == [0, 1]
    assert coeffs(rep.chambers[0]) == [1, -1]
    S = catalog.square()
    rep = dh_scan(build_prato_data(S), S, [1, 1])
    assert rep.ok and rep.walls == [0, 1, 2]
    assert [coeffs(c) for c in rep.chambers] == [[0, 1], [2, -1]]


def test_dh_quasi_and_weighted():
    S = catalog.quasi_interval()
    rep = dh_scan(build_prato_data(S), S, [1])
    assert rep.ok and coeffs(rep.chambers[0]) == [1]
    W = catalog.weighted_triangle()
    rep = dh_scan(build_prato_data(W), W, [0, 1])
    # slices at height y have length 2 - 2y
    assert coeffs(rep.chambers[0]) == [2, -2]


def test_dh_csv_rows():
    T = catalog.triangle()
    rows = dh_scan(build_prato_data(T), T, [1, 0]).csv_rows()
    assert rows[0] == ["u_exact", "u_float", "chamber_id", "V_exact", "V_float"]
    assert rows[1][2] == "wall" and rows[-1][2] == "wall"


def test_slice_quasilattice():
    Q = QuasiLattice.standard(2)
    S = slice_quasilattice(Q, [1, 1])
    assert S.e_dim == 1 and S.A.relations


def relabel(S, U):
    """Same polytope presented through A -> A by the unimodular U."""
    g = S.Q.generators
    Uinv = inverse(Matrix(U))
    Q2 = QuasiLattice(FgAbelianGroup(g), S.Q.e_dim, S.Q.boundary @ Uinv)
    labels = [tuple(matvec(U, b)) for b in S.labels]
    return StackyPolytope(Q2, S.P, labels)


def change_E(S, T):
    """Apply T in GL(E): boundary T del and normals T a with offsets kept."""
    Tm = Matrix(T)
    Q2 = QuasiLattice(S.Q.A, S.Q.e_dim, Tm @ S.Q.boundary)
    P2 = HPolytope(S.P.dim, [Tm @ a for a in S.P.normals], S.P.offsets)
    return StackyPolytope(Q2, P2, S.labels)


@given(st.sampled_from(["triangle", "weighted-triangle", "quasi-triangle"]),
       st.sampled_from([[[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
                        [[0, 1, 0], [1, 0, 0], [0, 0, 1]], [[1, 0, 2], [0, 1, -1], [0, 0, 1]]]),
       st.sampled_from([[[1, 0], [0, 1]], [[2, 1], [1, 1]], [[0, 3], [1, 0]]]))
@settings(max_examples=20)
def test_classification_is_invariant(name, U, T):
    S = catalog.CATALOG[name]()
    if S.Q.generators != 3:
        U = [r[:2] for r in U[:2]]
        if abs(int_det(U)) != 1:
            return
    base = classify(build_prato_data(S), S)
    for S2 in (relabel(S, U), change_E(S, T)):
        c = classify(build_prato_data(S2), S2)
        assert c.kind == base.kind
        # vertex order follows eta coordinates, so compare as multisets
        assert sorted(c.certificate.get("vertex_indices", [])) == \
            sorted(base.certificate.get("vertex_indices", []))


def test_analyze_report_shape():
    rep = analyze(catalog.quasi_interval(), config=SamplingConfig(samples=500, grid=Fraction(1, 10)))
    assert rep["classification"]["classification"] == "quasifold"
    assert rep["reduction"]["exists"] and rep["moment_image"]["ok"]
    assert rep["dimensions"]["quasifold_dim"] == 2
