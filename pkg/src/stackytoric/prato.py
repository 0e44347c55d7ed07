"""Toric quasifolds from labelled stacky polytopes.

The Hamiltonian model is ``C^n`` with the standard torus action and moment
map ``mu(z) = sum |z_i|^2 e_i^* + lambda``.  The polytope normals define
``pi: R^n -> E`` with ``pi(e_i) = a_i``; the null directions are
``n = ker pi`` and the zero fibre is cut out by ``iota^*(s + lambda) = 0``
with ``s_i = |z_i|^2``.  Its image in ``E^*`` under ``(pi^*)^-1`` is the
polytope.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.spatial import cKDTree

from .abelian import FgAbelianGroup, index_of_span
from .crossedmod import QuasiLattice, kernel_group, validate_quasilattice
from .errors import DataError, InputError, PreconditionError, UnboundedError, WallError
from .field import ONE, ZERO, Scalar
from .linalg import Matrix, discrete_subgroup_test, dot, rank, rank_kernel_solve, solve, vec
from .polytope import (HPolytope, affine_dimension, check_bounded, is_simple,
                       slice_polytope, vertices, volume)
from .simplex import simplex_std

COVERS = ("labels", "universal", "full-preimage", "quotient")
RNG_NAME = "Philox4x64-10"


@dataclass(frozen=True)
class StackyPolytope:
    """A polytope in ``E^*`` with facet labels in the quasi-lattice ``A -> E``."""

    Q: QuasiLattice
    P: HPolytope
    labels: tuple  # integer coordinate vectors in Z^g, one per facet

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(tuple(int(x) for x in b) for b in self.labels))

    @property
    def n(self) -> int:
        return self.P.nfacets


@dataclass(frozen=True)
class StackyValidation:
    valid: bool
    problems: tuple = ()
    bounded: bool = True
    full_dimensional: bool = True

    def as_dict(self) -> dict:
        return {"valid": self.valid, "problems": list(self.problems),
                "bounded": self.bounded, "full_dimensional": self.full_dimensional}


def validate_stacky(S: StackyPolytope) -> StackyValidation:
    problems = []
    qrep = validate_quasilattice(S.Q)
    problems += list(qrep.violations)
    if S.P.dim != S.Q.e_dim:
        problems.append("polytope dimension differs from dim E")
    if len(S.labels) != S.n:
        problems.append("one label per facet is required")
    for i, (b, a) in enumerate(zip(S.labels, S.P.normals)):
        if len(b) != S.Q.generators:
            problems.append(f"label {i} has the wrong length")
        elif S.Q.image(b) != a:
            problems.append(f"label {i} does not map to normal {i}")
        if not any(a):
            problems.append(f"normal {i} is zero")
    bounded = full = True
    if not problems:
        bounded = check_bounded(S.P)
        if bounded:
            vs = vertices(S.P)
            full = affine_dimension([v.point for v in vs]) == S.P.dim
    return StackyValidation(not problems, tuple(problems), bounded, full)


@dataclass(frozen=True)
class PratoData:
    n: int
    e_dim: int
    lam: tuple
    pi: Matrix  # e x n, column i is a_i
    n_space: tuple  # basis of ker pi, vectors in R^n
    iota_star: Matrix  # k x n, rows are the basis vectors of n
    cover: str
    Z: tuple
    quasi_lattice: QuasiLattice  # the quasi-lattice fixed by the cover choice
    labels: tuple

    @property
    def k(self) -> int:
        return len(self.n_space)

    def pi_star(self, eta: Sequence) -> tuple:
        """``pi^* eta = (<a_i, eta>)_i``."""
        return self.pi.T @ vec(eta)

    def eta_from_s(self, s: Sequence) -> tuple | None:
        """The unique eta with ``pi^* eta = s + lambda``, or None off the zero fibre."""
        rhs = [x + l for x, l in zip(vec(s), self.lam)]
        return solve(self.pi.T, rhs)

    def constraint(self, s: Sequence) -> tuple:
        """``iota^*(s + lambda)``; zero exactly on the zero fibre."""
        return self.iota_star @ [x + l for x, l in zip(vec(s), self.lam)]

    def as_dict(self) -> dict:
        return {"n": self.n, "E_dim": self.e_dim, "lambda": list(self.lam),
                "pi": self.pi.tolist(), "null_space": [list(v) for v in self.n_space],
                "cover": self.cover, "Z": [list(z) for z in self.Z]}


def build_prato_data(S: StackyPolytope, cover: str | None = None,
                     Z: Sequence[Sequence[int]] = ()) -> PratoData:
    """Assemble the Hamiltonian data of the toric model of S.

    ``cover`` chooses the group integrating the null directions:
    ``"labels"`` (default) keeps the quasi-lattice of S, ``"universal"``
    uses ``Z^n -> E``, ``"full-preimage"`` divides by the integer points of
    the null space and ``"quotient"`` divides by the vectors Z.
    """
    cover = cover or "labels"
    if cover not in COVERS:
        raise InputError(f"unknown cover {cover!r}", allowed=list(COVERS))
    rep = validate_stacky(S)
    if not rep.valid:
        raise InputError("invalid stacky polytope", problems=list(rep.problems))
    n, e = S.n, S.P.dim
    pi = Matrix.from_columns(S.P.normals, e)
    if rank(pi) != e:
        raise DataError("facet normals do not span E", rank=rank(pi), E_dim=e)
    ker = rank_kernel_solve(pi).kernel
    iota = Matrix(ker, n)
    lam = S.P.offsets
    Zt: tuple = ()
    if cover == "labels":
        QL, labels = S.Q, S.labels
    else:
        std = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        probe = QuasiLattice(FgAbelianGroup(n), e, pi)
        if cover == "universal":
            rels: tuple = ()
        elif cover == "full-preimage":
            rels = tuple(tuple(v) for v in probe.kernel_lattice())
        else:
            for z in Z:
                if len(z) != n or any(probe.image(z)):
                    raise InputError("cover kernel element is not in the null space",
                                     element=list(z))
            rels = tuple(tuple(int(x) for x in z) for z in Z)
            Zt = rels
        QL, labels = QuasiLattice(FgAbelianGroup(n, rels), e, pi), tuple(std)
    return PratoData(n, e, lam, pi, ker, iota, cover, Zt, QL, labels)


# -- regularity ---------------------------------------------------------------

@dataclass(frozen=True)
class RegularityReport:
    regular: bool
    ranks: tuple  # per vertex: rank of {iota^* e_i^* : i inactive}
    failing_vertex: tuple | None = None
    required_rank: int = 0

    def __bool__(self):
        return self.regular

    def as_dict(self) -> dict:
        return {"regular": self.regular, "ranks": list(self.ranks),
                "required_rank": self.required_rank, "failing_vertex": self.failing_vertex}


def regular_value_check(D: PratoData, P: HPolytope) -> RegularityReport:
    """Is 0 a regular value of ``iota^* o mu``?

    At a vertex the coordinates with ``s_i = 0`` are the active facets; the
    differential there has image spanned by the columns of ``iota^*`` of the
    inactive facets.
    """
    vs = vertices(P)
    ranks = []
    for v in vs:
        cols = [D.iota_star.col(i) for i in range(D.n) if i not in v.active]
        r = rank(Matrix.from_columns(cols, D.k)) if cols and D.k else 0
        ranks.append(r)
        if r < D.k:
            return RegularityReport(False, tuple(ranks), v.point, D.k)
    return RegularityReport(True, tuple(ranks), None, D.k)


def _local_freeness(D: PratoData, P: HPolytope) -> tuple[bool, tuple | None]:
    """``n`` meets ``span{e_i : i active}`` only in 0 at every vertex."""
    for v in vertices(P):
        rows = [list(w) for w in D.n_space]
        rows += [[ONE if j == i else ZERO for j in range(D.n)] for i in sorted(v.active)]
        if rows and rank(Matrix(rows, D.n)) < len(rows):
            return False, v.point
    return True, None


# -- moment image ---------------------------------------------------------------

@dataclass
class SamplingConfig:
    seed: int = 0x5EED
    samples: int = 10_000
    grid: Fraction = Fraction(1, 100)
    guard: Fraction = Fraction(1, 10**9)
    shard_size: int = 2_500


def shard_rng(seed: int, shard: int) -> np.random.Generator:
    """Philox stream for one shard; the key packs (shard, seed) into 128 bits."""
    key = ((shard & (2**64 - 1)) << 64) | (seed & (2**64 - 1))
    return np.random.Generator(np.random.Philox(key=key))


@dataclass
class MomentImageReport:
    empty: bool
    vertices: list = field(default_factory=list)  # per vertex: point, s, residual
    vertices_attained: bool = True
    samples: int = 0
    attempts: int = 0
    contained: int = 0
    max_violation: float = 0.0
    grid_points: int = 0
    grid_covered: int = 0
    grid_radius: Fraction = Fraction(0)
    image_equals_polytope: bool = True
    seed: int = 0
    rng: str = RNG_NAME

    @property
    def ok(self) -> bool:
        return (self.vertices_attained and self.contained == self.samples
                and self.grid_covered == self.grid_points)

    def as_dict(self) -> dict:
        return {
            "empty": self.empty, "ok": self.ok,
            "vertices": self.vertices, "vertices_attained": self.vertices_attained,
            "image_equals_polytope": self.image_equals_polytope,
            "monte_carlo": {"rng": self.rng, "seed": self.seed, "samples": self.samples,
                            "attempts": self.attempts, "contained": self.contained,
                            "guard": "1e-9", "max_violation": self.max_violation},
            "grid": {"h": self.grid_radius, "points": self.grid_points,
                     "covered": self.grid_covered},
        }


def _float_matrix(M: Matrix) -> np.ndarray:
    return np.array([[float(x) for x in r] for r in M.rows], dtype=float).reshape(M.shape)


def moment_image(D: PratoData, P: HPolytope, config: SamplingConfig | None = None) -> MomentImageReport:
    """Verify that the zero fibre maps onto P.

    Vertices are attained by explicit zero-fibre points (exact check).
    Sampled points of the zero fibre are produced by projecting uniform
    points of a box in s-space onto the affine constraint and keeping those
    in the closed orthant; their images are tested for membership in P with
    guard epsilon, and every grid point of P is checked to lie within the
    grid spacing of some image.
    """
    cfg = config or SamplingConfig()
    vs = vertices(P)
    rep = MomentImageReport(empty=not vs, seed=cfg.seed, grid_radius=cfg.grid)
    if not vs:
        return rep
    smax = [ZERO] * D.n
    for v in vs:
        s = tuple(x - l for x, l in zip(D.pi_star(v.point), D.lam))
        resid = D.constraint(s)
        eta = D.eta_from_s(s)
        ok = all(x >= 0 for x in s) and not any(resid) and eta == v.point
        rep.vertices.append({"point": list(v.point), "s": list(s),
                             "residual": [x for x in resid], "attained": ok})
        rep.vertices_attained &= ok
        smax = [max(a, b) for a, b in zip(smax, s)]
    # image vertex set equals the polytope vertex set
    rep.image_equals_polytope = rep.vertices_attained

    W = _float_matrix(D.iota_star) if D.k else np.zeros((0, D.n))
    lam = np.array([float(x) for x in D.lam])
    hi = np.array([float(x) for x in smax])
    PT = _float_matrix(D.pi.T)  # n x e
    pinv = np.linalg.pinv(PT)
    if D.k:
        WWt_inv = np.linalg.inv(W @ W.T)
    images = []
    attempts = 0
    shard = 0
    while len(images) < cfg.samples and attempts < 50 * cfg.samples + 1000:
        rng = shard_rng(cfg.seed, shard)
        shard += 1
        m = cfg.shard_size
        box = rng.random((m, D.n)) * hi
        phases = rng.random((m, D.n)) * 2 * np.pi
        if D.k:
            corr = ((box + lam) @ W.T) @ WWt_inv @ W
            s = box - corr
        else:
            s = box
        attempts += m
        keep = np.all(s >= 0, axis=1)
        z = np.sqrt(s[keep]) * np.exp(1j * phases[keep])
        mu = np.abs(z) ** 2 + lam  # mu(z) in (R^n)^*
        eta = mu @ pinv.T
        for row in eta:
            if len(images) >= cfg.samples:
                break
            images.append(row)
    rep.attempts = attempts
    rep.samples = len(images)
    # exact membership with guard: <a_i, eta> - lambda_i >= -eps
    eps = cfg.guard
    contained, worst = 0, 0.0
    # float residuals far above the guard cannot flip sign exactly; only the
    # rest go through the exact test
    A = np.array([[float(x) for x in a] for a in P.normals]).reshape(P.nfacets, P.dim)
    lo = np.array([float(x) for x in P.offsets])
    pts = np.array(images).reshape(len(images), P.dim)
    clear = np.all(pts @ A.T - lo > 1e-6, axis=1) if len(images) else np.zeros(0, bool)
    contained += int(clear.sum())
    for row in pts[~clear]:
        eta = tuple(Scalar(Fraction(float(x))) for x in row)
        inside = True
        for r in P.residuals(eta):
            if r < -eps:
                inside = False
                worst = max(worst, -float(r))
        contained += inside
    rep.contained = contained
    rep.max_violation = worst
    # grid coverage
    grid = _grid_points(P, cfg.grid)
    rep.grid_points = len(grid)
    if grid and images:
        # attained vertices are zero-fibre points too; they anchor the corners
        anchors = [[float(x) for x in v["point"]] for v in rep.vertices if v["attained"]]
        cloud = np.array(images + anchors).reshape(len(images) + len(anchors), P.dim)
        tree = cKDTree(cloud)
        dist, _ = tree.query(np.array(grid, dtype=float).reshape(len(grid), P.dim))
        rep.grid_covered = int(np.sum(dist <= float(cfg.grid)))
    return rep


def _grid_points(P: HPolytope, h: Fraction) -> list[list[float]]:
    """Points of the lattice ``h Z^e`` inside P (exact membership)."""
    vs = vertices(P)
    e = P.dim
    if e == 0:
        return [[]]
    lo = [min(v.point[j] for v in vs) for j in range(e)]
    up = [max(v.point[j] for v in vs) for j in range(e)]
    ranges = []
    for a, b in zip(lo, up):
        i0 = int(np.ceil(float(a) / float(h))) - 1
        i1 = int(np.floor(float(b) / float(h))) + 1
        ranges.append(range(i0, i1 + 1))
    out = []
    for idx in itertools.product(*ranges):
        pt = tuple(Scalar(h * i) for i in idx)
        if P.contains(pt):
            out.append([float(h * i) for i in idx])
    return out


# -- classification -------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    kind: str  # "manifold" | "orbifold" | "quasifold"
    certificate: dict

    def as_dict(self) -> dict:
        return {"classification": self.kind, **self.certificate}


def null_space_rational(D: PratoData) -> bool:
    """Is ``ker pi`` spanned by rational vectors?  Same as ``pi(Z^n)`` discrete."""
    return discrete_subgroup_test(D.pi.columns())


def vertex_indices(D: PratoData, P: HPolytope) -> list[int | None]:
    """Index of ``span(active labels) + relations`` in ``Z^g`` at each vertex."""
    QL = D.quasi_lattice
    g = QL.generators
    rels = [list(r) for r in QL.A.relations]
    out = []
    for v in vertices(P):
        vecs = [list(D.labels[i]) for i in sorted(v.active)] + rels
        out.append(index_of_span(vecs, g))
    return out


def classify(D: PratoData, S: StackyPolytope) -> Classification:
    """Manifold, orbifold or quasifold, decided exactly.

    Quasifold unless the image of A is discrete and ``ker del`` is finite;
    manifold when in addition ``ker del`` is trivial and the active labels
    generate A at every vertex.
    """
    QL = D.quasi_lattice
    rational_n = null_space_rational(D)
    discrete = discrete_subgroup_test(QL.boundary.columns())
    kr, kt = kernel_group(QL).invariants()
    finite = kr == 0
    cert = {"null_space_rational": rational_n, "image_discrete": discrete,
            "kernel": {"rank": kr, "torsion": list(kt)}, "cover": D.cover,
            "regular_value": regular_value_check(D, S.P).regular}
    if not (discrete and finite):
        reason = "image of A not discrete" if not discrete else "ker del infinite"
        return Classification("quasifold", {**cert, "reason": reason})
    idx = vertex_indices(D, S.P)
    cert["vertex_indices"] = idx
    cert["simple"] = is_simple(S.P)
    if not kt and all(i == 1 for i in idx):
        return Classification("manifold", cert)
    return Classification("orbifold", cert)


def hypotheses_report(D: PratoData, S: StackyPolytope) -> dict:
    """Flags for regularity, local freeness, leafwise transitivity and properness."""
    bounded = check_bounded(S.P)
    out = {"d_proper": bounded}
    if bounded:
        reg = regular_value_check(D, S.P)
        free, where = _local_freeness(D, S.P)
        out.update({"a_regular": reg.regular, "b_locally_free": free})
        if where is not None:
            out["b_witness_vertex"] = list(where)
        if not reg.regular:
            out["a_witness_vertex"] = list(reg.failing_vertex)
    else:
        out.update({"a_regular": None, "b_locally_free": None})
    out["c_leafwise_transitive"] = True
    out["c_note"] = "structural: the null foliation is the orbit foliation of the null subgroup"
    out["clean"] = out["c_leafwise_transitive"]
    out["clean_note"] = "implied by leafwise transitivity, not computed independently"
    return out


# -- reduction --------------------------------------------------------------------

@dataclass(frozen=True)
class ReductionVerdict:
    exists: bool
    cover: str
    witness: tuple | None = None
    model: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"exists": self.exists, "cover": self.cover,
                "witness": None if self.witness is None else list(self.witness),
                "model": self.model}


def reduction_exists(D: PratoData, S: StackyPolytope,
                     arrow_stabilizer: Sequence[Sequence[int]] = ()) -> ReductionVerdict:
    """Decide freeness of the cover group on the arrows of the regular form.

    The cover group acts on arrows by translation on its own factor, so the
    only possible stabilizers are integer null vectors that also fix the
    fibre data; ``arrow_stabilizer`` lists such vectors.  A stabilizer that is
    nonzero modulo the cover kernel gives a witness ``(h, u(x))``.
    """
    if not regular_value_check(D, S.P):
        raise PreconditionError("0 is not a regular value")
    probe = QuasiLattice(FgAbelianGroup(D.n), D.e_dim, D.pi)
    Zrels = FgAbelianGroup(D.n, D.Z) if D.cover == "quotient" else None
    for h in arrow_stabilizer:
        h = [int(x) for x in h]
        if len(h) != D.n or any(probe.image(h)):
            raise InputError("stabilizer element is not an integer null vector", element=h)
        if D.cover == "universal":
            nonzero = any(h)
        elif D.cover == "quotient":
            nonzero = not Zrels.contains_relation_span(h)
        else:
            nonzero = False
        if nonzero:
            v = vertices(S.P)[0]
            s = [x - l for x, l in zip(D.pi_star(v.point), D.lam)]
            return ReductionVerdict(False, D.cover, (h, {"unit_at": s}))
    model = {"objects": "zero fibre", "arrows": "G x^H R1",
             "source": "s[g,f] = s(f)", "target": "t[g,f] = g.t(f)",
             "reduced_dimension": 2 * D.e_dim}
    return ReductionVerdict(True, D.cover, None, model)


def _faces(P: HPolytope) -> list[frozenset]:
    """All nonempty faces as sets of vertex indices."""
    vs = vertices(P)
    allv = frozenset(range(len(vs)))
    facets = {frozenset(i for i, v in enumerate(vs) if f in v.active) for f in range(P.nfacets)}
    faces = {allv}
    frontier = [allv]
    while frontier:
        F = frontier.pop()
        for S in facets:
            G = F & S
            if G and G not in faces:
                faces.add(G)
                frontier.append(G)
    return sorted(faces, key=lambda F: (len(F), sorted(F)))


def _in_hull(points: list[tuple], u: tuple) -> bool:
    m = len(points)
    rows = [[p[j] for p in points] for j in range(len(u))] + [[ONE] * m]
    return simplex_std(rows, list(u) + [ONE], [ZERO] * m).status == "optimal"


def reduced_dimension(D: PratoData, P: HPolytope, u: Sequence, xi: Sequence[Sequence] | None = None) -> dict:
    """Dimension bookkeeping for reduction by the directions ``xi`` at level u.

    ``xi`` defaults to the full torus (the identity).  A level on the image
    of a face whose image has dimension below ``rank xi`` is a wall.
    """
    e = D.e_dim
    xi = [vec(r) for r in (xi if xi is not None else Matrix.identity(e).rows)]
    u = vec(u if isinstance(u, (list, tuple)) else [u])
    X = Matrix(xi, e)
    r = rank(X)
    if r == 0:
        raise InputError("reducing directions are zero")
    if len(u) != len(xi):
        raise InputError("level has the wrong length", expected=len(xi))
    vs = vertices(P)
    imgs = [X @ v.point for v in vs]
    if not vs or not _in_hull(imgs, u):
        raise PreconditionError("level is outside the image of the moment map")
    for F in _faces(P):
        pts = [imgs[i] for i in sorted(F)]
        if affine_dimension(pts) < r and _in_hull(pts, u):
            raise WallError("level lies on a wall", face=[list(vs[i].point) for i in sorted(F)],
                            level=list(u))
    k = D.k
    return {"zero_fibre_dim": 2 * D.n - k, "level_set_dim": 2 * D.n - k - r,
            "quasifold_dim": 2 * e, "reduced_dim": 2 * e - 2 * r, "slice_dim": e - r,
            "reducing_rank": r}


# -- Duistermaat-Heckman scan -------------------------------------------------------

def _fit(us: list[Scalar], vals: list[Scalar], degree: int) -> list[Scalar]:
    """Exact interpolating coefficients (constant first) through degree+1 points."""
    m = degree + 1
    V = Matrix([[u ** p for p in range(m)] for u in us[:m]], m)
    c = solve(V, vals[:m])
    return list(c)


def _peval(c: list[Scalar], u: Scalar) -> Scalar:
    out = ZERO
    for a in reversed(c):
        out = out * u + a
    return out


@dataclass
class DhScanReport:
    xi: tuple
    walls: list
    chambers: list  # per chamber: interval, coefficients, degree, residual_zero
    rows: list  # (u, chamber_id, V)
    continuous: bool
    slice_dim: int
    slice_quasi_lattice: QuasiLattice | None = None
    point_slice_convention: bool = False

    @property
    def ok(self) -> bool:
        return self.continuous and all(c["residual_zero"] and c["degree"] <= self.slice_dim
                                       for c in self.chambers)

    def as_dict(self) -> dict:
        return {
            "xi": list(self.xi), "walls": self.walls, "slice_dim": self.slice_dim,
            "chambers": self.chambers, "continuous": self.continuous, "ok": self.ok,
            "point_slice_convention": self.point_slice_convention,
            "slice_quasi_lattice": None if self.slice_quasi_lattice is None else {
                "generators": self.slice_quasi_lattice.generators,
                "relations": [list(r) for r in self.slice_quasi_lattice.A.relations],
                "E_dim": self.slice_quasi_lattice.e_dim,
                "del": self.slice_quasi_lattice.boundary.tolist()},
        }

    def csv_rows(self) -> list[list[str]]:
        out = [["u_exact", "u_float", "chamber_id", "V_exact", "V_float"]]
        for u, cid, V in self.rows:
            out.append([str(u), repr(float(u)), str(cid), str(V), repr(float(V))])
        return out


def slice_quasilattice(Q: QuasiLattice, xi: Sequence) -> QuasiLattice:
    """``A / del^-1(R xi) -> E / R xi`` in the slice coordinates.

    The quotient ``E -> E / R xi`` drops the leftmost coordinate j with
    ``xi_j != 0`` after subtracting ``(v_j / xi_j) xi``, matching the
    coordinates used for slices of polytopes.
    """
    xi = vec(xi)
    j = next(k for k, x in enumerate(xi) if x)
    e = Q.e_dim
    M = Matrix([[(ONE if c == k else ZERO) - (xi[k] / xi[j] if c == j else ZERO)
                 for c in range(e)] for k in range(e) if k != j], e)
    bd = M @ Q.boundary
    probe = QuasiLattice(FgAbelianGroup(Q.generators), e - 1, bd)
    rels = probe.kernel_lattice()
    return QuasiLattice(FgAbelianGroup(Q.generators, tuple(tuple(r) for r in rels)), e - 1, bd)


def dh_scan(D: PratoData, S: StackyPolytope, xi: Sequence, points: int | None = None) -> DhScanReport:
    """Slice volumes ``V(u) = vol(P cap {<xi, eta> = u})`` across all chambers.

    Each chamber gets ``points`` interior samples (default ``dim + 2``); a
    polynomial of degree ``dim(slice)`` is fitted exactly through the first
    ones and the rest must lie on it with residual zero.
    """
    xi = vec(xi)
    if len(xi) != S.P.dim:
        raise InputError("direction has the wrong length", expected=S.P.dim)
    if not any(xi):
        raise InputError("reducing direction is zero")
    if not check_bounded(S.P):
        raise UnboundedError("polytope is unbounded")
    if not regular_value_check(D, S.P):
        raise PreconditionError("0 is not a regular value")
    m = S.P.dim - 1
    points = max(points or (m + 3), m + 2)
    walls = sorted({dot(xi, v.point) for v in vertices(S.P)})
    V = lambda u: volume(slice_polytope(S.P, xi, u))
    rows = []
    chambers = []
    for cid, (a, b) in enumerate(zip(walls, walls[1:])):
        us = [a + (b - a) * Fraction(i, points + 1) for i in range(1, points + 1)]
        vals = [V(u) for u in us]
        coeffs = _fit(us, vals, m)
        resid = [_peval(coeffs, u) - v for u, v in zip(us, vals)]
        while len(coeffs) > 1 and not coeffs[-1]:
            coeffs.pop()
        chambers.append({"id": cid, "interval": [a, b], "coefficients": coeffs,
                         "degree": len(coeffs) - 1 if any(coeffs) else 0,
                         "linear_coefficient": coeffs[1] if len(coeffs) > 1 else ZERO,
                         "residual_zero": not any(resid),
                         "left_limit": _peval(coeffs, a), "right_limit": _peval(coeffs, b)})
        rows.append((a, "wall", V(a)))
        rows.extend((u, cid, v) for u, v in zip(us, vals))
    if walls:
        rows.append((walls[-1], "wall", V(walls[-1])))
    continuous = True
    for c1, c2 in zip(chambers, chambers[1:]):
        w = c1["interval"][1]
        vw = V(w)
        c1["continuous_at_right"] = c2["continuous_at_left"] = \
            c1["right_limit"] == c2["left_limit"] == vw
        continuous &= c1["continuous_at_right"]
    sq = slice_quasilattice(D.quasi_lattice, xi) if m >= 0 else None
    return DhScanReport(tuple(xi), walls, chambers, rows, continuous, m, sq,
                        point_slice_convention=(m == 0))


# -- one-shot analysis ------------------------------------------------------------

def analyze(S: StackyPolytope, cover: str | None = None, Z: Sequence = (),
            config: SamplingConfig | None = None) -> dict:
    """Full report: validity, hypotheses, classification, reduction and moment image."""
    cfg = config or SamplingConfig()
    val = validate_stacky(S)
    report: dict = {"validity": val.as_dict()}
    if not val.valid:
        return report
    D = build_prato_data(S, cover, Z)
    report["data"] = D.as_dict()
    report["dimensions"] = {"n": D.n, "null_dim": D.k, "E_dim": D.e_dim,
                            "zero_fibre_dim": 2 * D.n - D.k, "quasifold_dim": 2 * D.e_dim}
    report["hypotheses"] = hypotheses_report(D, S)
    if not val.bounded:
        return report
    report["vertices"] = [v.as_dict() for v in vertices(S.P)]
    report["simple"] = is_simple(S.P)
    reg = regular_value_check(D, S.P)
    report["regular"] = reg.regular
    report["classification"] = classify(D, S).as_dict()
    report["reduction"] = reduction_exists(D, S).as_dict() if reg.regular else None
    report["moment_image"] = moment_image(D, S.P, cfg).as_dict()
    return report
