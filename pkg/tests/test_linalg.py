from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from stackytoric.field import Scalar, root
from stackytoric.linalg import (Matrix, det, discrete_subgroup_test, inverse, kernel, rank,
                                rational_rank, rref, solve)

small = st.integers(-6, 6)
int_matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m)))


def to_sympy(M):
    return sympy.Matrix([[sympy.Rational(x.a.numerator, x.a.denominator)
                          + sympy.Rational(x.b.numerator, x.b.denominator) * sympy.sqrt(x.d)
                          for x in r] for r in M.rows])


@given(int_matrices)
def test_rank_and_rref_match_sympy(rows):
    M = Matrix(rows)
    S = sympy.Matrix(rows)
    R, piv = rref(M)
    SR, spiv = S.rref()
    assert rank(M) == S.rank()
    assert tuple(piv) == spiv
    assert [[Fraction(str(x)) for x in r] for r in SR.tolist()[:len(piv)]] == \
        [[x.a for x in r] for r in R[:len(piv)]]


@given(int_matrices)
def test_kernel_vectors_are_annihilated(rows):
    M = Matrix(rows)
    K = kernel(M)
    assert len(K) == M.shape[1] - rank(M)
    for v in K:
        assert not any(M @ v)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_det_inverse_solve(rows):
    M = Matrix(rows)
    d = det(M)
    assert d == int(sympy.Matrix(rows).det())
    if d:
        Mi = inverse(M)
        assert M @ Mi == Matrix.identity(3)
        b = (Scalar(1), Scalar(-2), Scalar(3))
        assert M @ solve(M, b) == b


def test_quadratic_field_matrix_against_sympy():
    r = root(2)
    M = Matrix([[1, r, 0], [r, 3, 1], [0, 1, r + 1]])
    d = det(M)
    assert sympy.simplify(to_sympy(M).det() - (d.a + d.b * sympy.sqrt(2))) == 0
    assert M @ inverse(M) == Matrix.identity(3)


def test_discreteness_of_images():
    r = root(2)
    assert discrete_subgroup_test([(Scalar(1),), (Scalar(2),)])
    assert not discrete_subgroup_test([(Scalar(1),), (r,)])
    assert rational_rank([(Scalar(1),), (r,)]) == 2
    # 1, sqrt 2 and 1 + sqrt 2 span a rank 2 group in R: not discrete
    assert not discrete_subgroup_test([(Scalar(1),), (r,), (r + 1,)])
    # sqrt 2 e1 alone is discrete in R^2
    assert discrete_subgroup_test([(r, Scalar(0))])
