import sympy
from hypothesis import given, strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from conftest import invariant_factors_oracle
from stackytoric.abelian import (FgAbelianGroup, index_of_span, int_det, integer_kernel,
                                 integer_solve, matmul, smith_normal_form, subgroup_quotient)

entries = st.integers(-9, 9)


def shaped(m, n):
    return st.lists(st.lists(entries, min_size=n, max_size=n), min_size=m, max_size=m)


any_shape = st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(lambda n: shaped(m, n)))


def check_snf(M):
    U, S, V = smith_normal_form(M)
    assert matmul(matmul(U, M), V) == S
    assert abs(int_det(U)) == 1 and abs(int_det(V)) == 1
    diag = [S[i][i] for i in range(min(len(S), len(S[0])))]
    for i, row in enumerate(S):
        for j, x in enumerate(row):
            assert i == j or x == 0
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert diag[:len(nz)] == nz
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    return nz


@given(any_shape)
def test_snf_against_determinantal_divisors(M):
    assert check_snf(M) == invariant_factors_oracle(M)


@given(shaped(3, 3))
def test_snf_against_sympy(M):
    ours = check_snf(M)
    D = sympy_snf(sympy.Matrix(M), domain=sympy.ZZ)
    theirs = sorted(abs(int(D[i, i])) for i in range(3) if D[i, i])
    assert sorted(ours) == theirs


@given(any_shape)
def test_integer_kernel_is_saturated_basis(M):
    n = len(M[0])
    K = integer_kernel(M, n)
    assert len(K) == n - sympy.Matrix(M).rank()
    for v in K:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in M)
    if K:
        # a saturated lattice has index-1 span inside its rational span
        assert invariant_factors_oracle(K) == [1] * len(K)


@given(shaped(3, 3), st.lists(entries, min_size=3, max_size=3))
def test_integer_solve_finds_preimages(M, x):
    b = [sum(a * c for a, c in zip(r, x)) for r in M]
    y = integer_solve(M, b, 3)
    assert y is not None
    assert [sum(a * c for a, c in zip(r, y)) for r in M] == b


def test_integer_solve_detects_no_solution():
    assert integer_solve([[2, 0], [0, 2]], [1, 0]) is None


def test_index_of_span():
    assert index_of_span([[2, 0], [0, 3]], 2) == 6
    assert index_of_span([[1, 1], [1, -1]], 2) == 2
    assert index_of_span([[1, 0]], 2) is None
    assert index_of_span([[1, 0], [0, 1], [5, 7]], 2) == 1


def test_group_invariants():
    G = FgAbelianGroup(3, ((2, 0, 0), (0, 4, 0)))
    assert G.invariants() == (1, (2, 4))
    H = FgAbelianGroup(2, ((2, 0), (0, 3)))
    assert H.invariants() == (0, (6,))
    assert H.order() == 6
    assert FgAbelianGroup(1, ((1,),)).is_trivial()
    assert FgAbelianGroup(2).order() is None


def test_subgroup_quotient():
    # 2Z / 4Z is Z/2
    assert subgroup_quotient([[2]], [[4]]).invariants() == (0, (2,))
    # Z^2 / span{(1,1)}, restricted to the lattice Z^2: rank 1
    assert subgroup_quotient([[1, 0], [0, 1]], [[1, 1]]).invariants() == (1, ())
