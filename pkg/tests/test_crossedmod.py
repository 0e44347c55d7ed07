import pytest
from hypothesis import given, strategies as st

from stackytoric.abelian import FgAbelianGroup, int_det
from stackytoric.crossedmod import (QuasiLattice, QuasiLatticeMorphism, check_morita_morphism,
                                    is_rational, kernel_group, morita_invariants,
                                    quasilattice_iso, two_torus_to_quasilattice,
                                    validate_quasilattice)
from stackytoric.errors import CertificateInvalidError, InputError, MorphismError
from stackytoric.field import Scalar, root
from stackytoric.linalg import Matrix

r2 = root(2)


def dense_line():
    return QuasiLattice(FgAbelianGroup(2), 1, Matrix([[1, r2]]))


def test_validation_flags_non_spanning_image():
    bad = QuasiLattice(FgAbelianGroup(1), 2, Matrix([[1], [0]]))
    rep = validate_quasilattice(bad)
    assert not rep.valid
    assert "image does not span E" in rep.violations
    assert validate_quasilattice(dense_line()).valid


def test_invariants_of_basic_examples():
    inv = morita_invariants(dense_line())
    assert (inv.kernel_rank, inv.kernel_torsion, inv.image_discrete) == (0, (), False)
    std = morita_invariants(QuasiLattice.standard(2))
    assert std.image_discrete and std.kernel_rank == 0
    # Z^2 -> R by (1, 2): kernel generated by (2, -1)
    Q = QuasiLattice(FgAbelianGroup(2), 1, Matrix([[1, 2]]))
    assert kernel_group(Q).invariants() == (1, ())
    assert is_rational(Q) and not is_rational(dense_line())


def test_torsion_in_the_kernel():
    # Z/3 x Z -> R, torsion generator maps to 0
    Q = QuasiLattice(FgAbelianGroup(2, ((3, 0),)), 1, Matrix([[0, 1]]))
    assert morita_invariants(Q).kernel_torsion == (3,)


def test_identity_is_morita():
    for Q in (dense_line(), QuasiLattice.standard(3)):
        assert check_morita_morphism(Q, Q, QuasiLatticeMorphism.identity(Q)).ok


def test_non_commuting_square_is_rejected():
    Q = dense_line()
    with pytest.raises(MorphismError):
        check_morita_morphism(Q, Q, QuasiLatticeMorphism([[1, 1], [0, 1]], Matrix([[1]])))


def test_doubling_is_not_morita():
    Q = QuasiLattice.standard(1)
    res = check_morita_morphism(Q, Q, QuasiLatticeMorphism([[2]], Matrix([[2]])))
    assert not res.ok
    assert res.certificate["phi_A_cokernel_index"] == 2


def test_projection_from_cover_is_morita():
    # Z^2 -> R by (1, 1) with relation (1, -1) is Morita equivalent to Z -> R
    big = QuasiLattice(FgAbelianGroup(2, ((1, -1),)), 1, Matrix([[1, 1]]))
    small = QuasiLattice.standard(1)
    assert check_morita_morphism(big, small, QuasiLatticeMorphism([[1, 1]], Matrix([[1]]))).ok


def test_iso_search_and_certificates():
    Q = dense_line()
    swapped = QuasiLattice(FgAbelianGroup(2), 1, Matrix([[r2, 1]]))
    res = quasilattice_iso(Q, swapped)
    assert res.status == "equivalent"
    cert = {"U": res.certificate["U"], "T": res.certificate["T"]}
    assert quasilattice_iso(Q, swapped, cert).status == "equivalent"
    with pytest.raises(CertificateInvalidError):
        quasilattice_iso(Q, swapped, {"U": [[1, 0], [0, 1]], "T": Matrix([[1]])})
    assert quasilattice_iso(Q, QuasiLattice.standard(2)).reason.endswith("E_dim")


def test_iso_search_respects_bound():
    Q = dense_line()
    far = QuasiLattice(FgAbelianGroup(2), 1, Matrix([[1 - r2, -1 + 2 * r2]]))
    assert quasilattice_iso(Q, far, bound=1).status == "unknown"
    assert quasilattice_iso(Q, far, bound=2).status == "equivalent"


@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_unimodular_changes_preserve_invariants(flat):
    U = [flat[:2], flat[2:]]
    if abs(int_det(U)) != 1:
        return
    Q = dense_line()
    # boundary' = boundary U^-1 makes U a morphism with T = 1
    a, b, c, d = flat
    det = a * d - b * c
    Uinv = [[d * det, -b * det], [-c * det, a * det]]
    moved = QuasiLattice(FgAbelianGroup(2), 1, Q.boundary @ Matrix(Uinv))
    assert check_morita_morphism(Q, moved, QuasiLatticeMorphism(U, Matrix([[1]]))).ok
    assert morita_invariants(Q) == morita_invariants(moved)


def test_two_torus_covers():
    # R^2 / Z^2 modulo the line spanned by (1, sqrt 2)
    line = [[Scalar(1), r2]]
    Q = two_torus_to_quasilattice(line)
    assert Q.e_dim == 1 and not is_rational(Q)
    assert morita_invariants(Q).kernel_rank == 0
    # a rational line gives a circle quotient; the universal cover keeps Z in the kernel
    Qr = two_torus_to_quasilattice([[1, 1]])
    assert is_rational(Qr)
    assert kernel_group(Qr).invariants() == (1, ())
    Qf = two_torus_to_quasilattice([[1, 1]], cover="full-preimage")
    assert kernel_group(Qf).is_trivial()
    Qq = two_torus_to_quasilattice([[1, 1]], cover="quotient", Z=[[3, 3]])
    assert kernel_group(Qq).invariants() == (0, (3,))
    with pytest.raises(InputError):
        two_torus_to_quasilattice([[1, 1]], cover="quotient", Z=[[1, 0]])
