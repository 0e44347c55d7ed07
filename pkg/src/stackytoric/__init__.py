"""Exact computations for stacky toric data over Q(sqrt d).

Submodules:

* ``field``, ``linalg``, ``abelian``: exact scalars, linear algebra and
  finitely generated abelian groups;
* ``crossedmod``: quasi-lattices, their Morita invariants and morphisms;
* ``fingroupoid``: crossed-module actions on finite groupoids;
* ``polytope``, ``simplex``: exact polyhedra, LP, vertices and volumes;
* ``prato``: the toric model of a stacky polytope;
* ``io``, ``cli``: JSON formats and the command-line front end.
"""

from .abelian import FgAbelianGroup, index_of_span, smith_normal_form
from .crossedmod import (QuasiLattice, QuasiLatticeMorphism, check_morita_morphism,
                         morita_invariants, quasilattice_iso, validate_quasilattice)
from .errors import (CertificateInvalidError, DataError, FieldMismatchError,
                     FreenessViolation, InputError, MorphismError, PreconditionError,
                     StackyError, StructureError, UnboundedError, WallError)
from .field import ONE, ZERO, Scalar, root
from .linalg import Matrix
from .polytope import HPolytope, lp_solve, vertices, volume
from .prato import (SamplingConfig, StackyPolytope, analyze, build_prato_data, classify,
                    dh_scan, moment_image, reduced_dimension, reduction_exists)

__version__ = "0.1.0"

__all__ = [
    "FgAbelianGroup", "index_of_span", "smith_normal_form", "QuasiLattice",
    "QuasiLatticeMorphism", "check_morita_morphism", "morita_invariants", "quasilattice_iso",
    "validate_quasilattice", "CertificateInvalidError", "DataError", "FieldMismatchError",
    "FreenessViolation", "InputError", "MorphismError", "PreconditionError", "StackyError",
    "StructureError", "UnboundedError", "WallError", "ONE", "ZERO", "Scalar", "root", "Matrix",
    "HPolytope", "lp_solve", "vertices", "volume", "SamplingConfig", "StackyPolytope",
    "analyze", "build_prato_data", "classify", "dh_scan", "moment_image", "reduced_dimension",
    "reduction_exists",
]
