"""Quasi-lattices ``A -> E`` and their Morita calculus.

A quasi-lattice is a finitely generated abelian group ``A`` (a
:class:`FgAbelianGroup`) with a homomorphism into a real vector space ``E``
whose image spans ``E``.  It presents a stacky torus; two quasi-lattices
present equivalent stacky tori exactly when they are isomorphic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from . import abelian
from .abelian import FgAbelianGroup, integer_kernel, subgroup_quotient
from .errors import CertificateInvalidError, InputError, MorphismError
from .field import Scalar
from .linalg import (Matrix, discrete_subgroup_test, inverse, rank, rank_kernel_solve,
                     rational_rank, rref, vec)


@dataclass(frozen=True)
class QuasiLattice:
    A: FgAbelianGroup
    e_dim: int
    boundary: Matrix  # e_dim x generators(A); column j is the image of generator j

    def __post_init__(self):
        if not isinstance(self.boundary, Matrix):
            object.__setattr__(self, "boundary", Matrix(self.boundary, self.A.generators))
        if self.boundary.shape != (self.e_dim, self.A.generators):
            raise InputError("boundary matrix has the wrong shape",
                             expected=[self.e_dim, self.A.generators],
                             got=list(self.boundary.shape))

    @property
    def generators(self) -> int:
        return self.A.generators

    @property
    def field_d(self) -> int:
        return self.boundary.field_d

    def image(self, a: Sequence[int]) -> tuple:
        """Image of the element with integer coordinates ``a``."""
        return self.boundary @ [Scalar(x) for x in a]

    def flat_rows(self) -> list[list]:
        """The boundary as a rational matrix with two rows per coordinate of E."""
        out = []
        for r in self.boundary.rows:
            out.append([x.a for x in r])
            out.append([x.b for x in r])
        return out

    def kernel_lattice(self) -> list[list[int]]:
        """Z-basis of ``{v in Z^g : boundary v = 0}``."""
        return integer_kernel(self.flat_rows(), self.generators)

    @classmethod
    def standard(cls, n: int) -> "QuasiLattice":
        return cls(FgAbelianGroup(n), n, Matrix.identity(n))


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    spanning_rank: int
    e_dim: int
    relations_killed: bool
    violations: tuple = ()


def validate_quasilattice(Q: QuasiLattice) -> ValidationReport:
    violations = []
    span = rank(Q.boundary) if Q.generators else 0
    if span < Q.e_dim:
        violations.append("image does not span E")
    killed = True
    for r in Q.A.relations:
        if any(Q.image(r)):
            killed = False
            violations.append(f"relation not killed: {list(r)}")
    return ValidationReport(not violations, span, Q.e_dim, killed, tuple(violations))


@dataclass(frozen=True)
class MoritaInvariants:
    kernel_rank: int
    kernel_torsion: tuple
    image_rank: int  # Z-rank of boundary(A), i.e. its Q-dimension
    image_discrete: bool
    e_dim: int

    def as_dict(self) -> dict:
        return {"kernel": {"rank": self.kernel_rank, "torsion": list(self.kernel_torsion)},
                "image_rank": self.image_rank, "image_discrete": self.image_discrete,
                "E_dim": self.e_dim}


def kernel_group(Q: QuasiLattice) -> FgAbelianGroup:
    """``ker(boundary)`` as an abstract group (kernel lattice mod relations)."""
    return subgroup_quotient(Q.kernel_lattice(), Q.A.relations)


def morita_invariants(Q: QuasiLattice) -> MoritaInvariants:
    rep = validate_quasilattice(Q)
    if not rep.valid:
        raise InputError("invalid quasi-lattice", violations=list(rep.violations))
    kr, kt = kernel_group(Q).invariants()
    cols = Q.boundary.columns()
    return MoritaInvariants(kr, kt, rational_rank(cols) if cols else 0,
                            discrete_subgroup_test(cols), Q.e_dim)


def is_rational(Q: QuasiLattice) -> bool:
    """Does the quasi-lattice have discrete image (an honest torus quotient)?"""
    return discrete_subgroup_test(Q.boundary.columns())


@dataclass(frozen=True)
class QuasiLatticeMorphism:
    phi_A: list  # g' x g integer matrix
    phi_E: Matrix  # e' x e

    def __post_init__(self):
        if not isinstance(self.phi_E, Matrix):
            object.__setattr__(self, "phi_E", Matrix(self.phi_E))
        object.__setattr__(self, "phi_A", [list(map(int, r)) for r in self.phi_A])

    @classmethod
    def identity(cls, Q: QuasiLattice) -> "QuasiLatticeMorphism":
        return cls(abelian.identity(Q.generators), Matrix.identity(Q.e_dim))


@dataclass(frozen=True)
class MoritaCheck:
    ok: bool
    certificate: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok


def _int_matrix_as_scalars(M, ncols: int) -> Matrix:
    return Matrix([[Scalar(x) for x in r] for r in M], ncols)


def _check_square(Q: QuasiLattice, Q2: QuasiLattice, m: QuasiLatticeMorphism) -> None:
    g, g2 = Q.generators, Q2.generators
    if len(m.phi_A) != g2 or any(len(r) != g for r in m.phi_A):
        raise MorphismError("phi_A has the wrong shape", expected=[g2, g])
    if m.phi_E.shape != (Q2.e_dim, Q.e_dim):
        raise MorphismError("phi_E has the wrong shape", expected=[Q2.e_dim, Q.e_dim])
    left = Q2.boundary @ _int_matrix_as_scalars(m.phi_A, g)
    right = m.phi_E @ Q.boundary
    if left != right:
        bad = next(j for j in range(g) if left.col(j) != right.col(j))
        raise MorphismError("square does not commute", generator=bad)
    for r in Q.A.relations:
        img = abelian.matvec(m.phi_A, r)
        if not Q2.A.contains_relation_span(img):
            raise MorphismError("phi_A does not preserve relations", relation=list(r))


def check_morita_morphism(Q: QuasiLattice, Q2: QuasiLattice, m: QuasiLatticeMorphism) -> MoritaCheck:
    """Decide whether ``m`` is a Morita morphism of quasi-lattices.

    Criteria: ``phi_E`` surjective, and ``a -> (phi_A(a), boundary(a))`` a
    bijection from A onto the fibre product ``A' x_{E'} E``.  A nonzero
    kernel of ``phi_E`` sits in the fibre product over ``0`` and cannot be
    covered by the countable group A, so surjectivity forces ``phi_E`` to be
    an isomorphism; the A-part then reduces to ``phi_A`` being injective and
    surjective on the presented groups.
    """
    _check_square(Q, Q2, m)
    g, g2 = Q.generators, Q2.generators
    cert: dict = {}
    rk = rank(m.phi_E)
    cert["phi_E_rank"] = rk
    cert["phi_E_surjective"] = rk == Q2.e_dim
    cert["phi_E_injective"] = rk == Q.e_dim

    # injectivity: v with boundary(v) = 0 and phi_A(v) in span(R') must lie in span(R)
    rels2 = [list(r) for r in Q2.A.relations]
    nw = len(rels2)
    system = []
    for i in range(g2):
        system.append([m.phi_A[i][j] for j in range(g)] + [-rels2[k][i] for k in range(nw)])
    for row in Q.flat_rows():
        system.append(list(row) + [0] * nw)
    lattice = integer_kernel(system, g + nw)
    leaks = [v[:g] for v in lattice if not Q.A.contains_relation_span(v[:g])]
    cert["injective"] = not leaks
    if leaks:
        cert["injectivity_witness"] = leaks[0]

    # surjectivity on A: phi_A(Z^g) + span(R') = Z^{g'}
    cols = [[m.phi_A[i][j] for i in range(g2)] for j in range(g)] + rels2
    idx = abelian.index_of_span(cols, g2) if g2 else 1
    cert["phi_A_cokernel_index"] = idx
    cert["surjective"] = bool(cert["phi_E_injective"] and idx == 1)
    if not cert["phi_E_injective"]:
        cert["surjectivity_failure"] = "phi_E has nonzero kernel"
    elif idx != 1:
        cert["surjectivity_failure"] = "phi_A misses part of A'"
    ok = cert["phi_E_surjective"] and cert["injective"] and cert["surjective"]
    return MoritaCheck(bool(ok), cert)


def two_torus_to_quasilattice(n_basis: Sequence[Sequence], n: int | None = None,
                              cover: str = "universal",
                              Z: Sequence[Sequence[int]] = ()) -> QuasiLattice:
    """Quasi-lattice of the stacky torus ``R^n / Z^n`` modulo the subspace ``n_basis``.

    ``cover`` picks the integrating group of the subspace: ``"universal"``
    (A = Z^n), ``"full-preimage"`` (the immersed subgroup itself; A is Z^n
    modulo the integer points of the subspace, so the boundary is injective)
    or ``"quotient"`` (A = Z^n / Z for integer vectors Z inside the subspace).
    E-coordinates are the reduced row echelon basis of the annihilator.
    """
    basis = [vec(v) for v in n_basis]
    if n is None:
        if not basis:
            raise InputError("ambient dimension needed for an empty subspace basis")
        n = len(basis[0])
    if any(len(v) != n for v in basis):
        raise InputError("subspace basis vectors have inconsistent length")
    N = Matrix(basis, n)
    if basis and rank(N) != len(basis):
        raise InputError("subspace basis is not linearly independent")
    ann = rank_kernel_solve(N).kernel if basis else Matrix.identity(n).rows
    if ann:
        rows, _ = rref(Matrix(ann, n))
        rows = rows[:len(ann)]
    else:
        rows = []
    boundary = Matrix(rows, n)
    e_dim = len(rows)
    probe = QuasiLattice(FgAbelianGroup(n), e_dim, boundary)
    if cover == "universal":
        rels: tuple = ()
    elif cover == "full-preimage":
        rels = tuple(tuple(v) for v in probe.kernel_lattice())
    elif cover == "quotient":
        for z in Z:
            if len(z) != n or any(probe.image(z)):
                raise InputError("cover kernel element is not in the subspace", element=list(z))
        rels = tuple(tuple(int(x) for x in z) for z in Z)
    else:
        raise InputError(f"unknown cover {cover!r}")
    Q = QuasiLattice(FgAbelianGroup(n, rels), e_dim, boundary)
    rep = validate_quasilattice(Q)
    assert rep.valid, rep
    return Q


def _shells(k: int, bound: int):
    """Integer k-tuples ordered by max-norm shell, then lexicographically."""
    for b in range(bound + 1):
        for flat in itertools.product(range(-b, b + 1), repeat=k):
            if max((abs(x) for x in flat), default=0) == b:
                yield flat


@dataclass(frozen=True)
class IsoResult:
    status: str  # "equivalent" | "inequivalent" | "unknown"
    certificate: dict | None = None
    reason: str = ""
    searched: int = 0


def _solve_T(Q: QuasiLattice, Q2: QuasiLattice, U) -> Matrix | None:
    """The unique T with ``T boundary = boundary' U`` if it exists and is invertible."""
    _, piv = rref(Q.boundary)
    if len(piv) != Q.e_dim or Q.e_dim != Q2.e_dim:
        return None
    target = Q2.boundary @ _int_matrix_as_scalars(U, Q.generators)
    B = Matrix([[Q.boundary[i, j] for j in piv] for i in range(Q.e_dim)], Q.e_dim)
    Tb = Matrix([[target[i, j] for j in piv] for i in range(Q2.e_dim)], Q.e_dim)
    T = Tb @ inverse(B)
    if T @ Q.boundary != target:
        return None
    if Q.e_dim and rank(T) != Q.e_dim:
        return None
    return T


def quasilattice_iso(Q: QuasiLattice, Q2: QuasiLattice, certificate: dict | None = None,
                     bound: int = 3, max_candidates: int = 2_000_000) -> IsoResult:
    """Certificate-first isomorphism test with bounded unimodular search."""
    if certificate is not None:
        try:
            U = [list(map(int, r)) for r in certificate["U"]]
            T = certificate["T"]
            T = T if isinstance(T, Matrix) else Matrix(T, Q.e_dim)
            m = QuasiLatticeMorphism(U, T)
            res = check_morita_morphism(Q, Q2, m)
        except (KeyError, TypeError, ValueError, MorphismError) as exc:
            raise CertificateInvalidError(f"malformed certificate: {exc}") from exc
        if not res.ok:
            raise CertificateInvalidError("certificate is not an isomorphism", check=res.certificate)
        return IsoResult("equivalent", {"U": m.phi_A, "T": m.phi_E, "check": res.certificate},
                         "certificate verified")

    inv1, inv2 = morita_invariants(Q), morita_invariants(Q2)
    for name in ("e_dim", "kernel_rank", "kernel_torsion", "image_rank", "image_discrete"):
        if getattr(inv1, name) != getattr(inv2, name):
            label = "E_dim" if name == "e_dim" else name
            return IsoResult("inequivalent", None, f"invariant mismatch: {label}")
    rank1, tors1 = Q.A.invariants()
    rank2, tors2 = Q2.A.invariants()
    if (rank1, tors1) != (rank2, tors2):
        return IsoResult("inequivalent", None, "invariant mismatch: A")
    g, g2 = Q.generators, Q2.generators
    if g != g2:
        return IsoResult("unknown", None, "bounded search needs equal generator counts")
    total = (2 * bound + 1) ** (g * g)
    if total > max_candidates:
        return IsoResult("unknown", None, f"search space {total} exceeds cap {max_candidates}")
    free = not Q.A.relations and not Q2.A.relations
    searched = 0
    for flat in _shells(g * g, bound):
        U = [list(flat[i * g:(i + 1) * g]) for i in range(g)]
        d = abelian.int_det(U)
        if d == 0 or (free and abs(d) != 1):
            continue
        searched += 1
        T = _solve_T(Q, Q2, U)
        if T is None:
            continue
        res = check_morita_morphism(Q, Q2, QuasiLatticeMorphism(U, T))
        if res.ok:
            return IsoResult("equivalent", {"U": U, "T": T, "check": res.certificate},
                             f"found by search at bound {bound}", searched)
    return IsoResult("unknown", None, f"no witness with entries bounded by {bound}", searched)

