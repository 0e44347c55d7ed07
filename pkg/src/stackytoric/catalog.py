"""Named stacky polytopes used in demos, tests and the acceptance suite."""

from __future__ import annotations

from .abelian import FgAbelianGroup
from .crossedmod import QuasiLattice
from .field import root
from .linalg import Matrix
from .polytope import HPolytope
from .prato import StackyPolytope


def rational_interval(scale: int = 1) -> StackyPolytope:
    """``[0, 1]`` with ``Z -> R`` and labels ``(scale, -scale)``."""
    Q = QuasiLattice(FgAbelianGroup(1), 1, Matrix([[1]]))
    P = HPolytope(1, [[scale], [-scale]], [0, -scale])
    return StackyPolytope(Q, P, [(scale,), (-scale,)])


def quasi_interval(d: int = 2) -> StackyPolytope:
    """``[0, 1]`` with ``Z^2 -> R``, generators to ``1`` and ``-sqrt d``."""
    r = root(d)
    Q = QuasiLattice(FgAbelianGroup(2), 1, Matrix([[1, -r]]))
    P = HPolytope(1, [[1], [-r]], [0, -r])
    return StackyPolytope(Q, P, [(1, 0), (0, 1)])


def triangle() -> StackyPolytope:
    """The standard triangle with the standard lattice: ``CP^2``."""
    Q = QuasiLattice.standard(2)
    P = HPolytope(2, [[1, 0], [0, 1], [-1, -1]], [0, 0, -1])
    return StackyPolytope(Q, P, [(1, 0), (0, 1), (-1, -1)])


def square() -> StackyPolytope:
    """The unit square with the standard lattice: ``CP^1 x CP^1``."""
    Q = QuasiLattice.standard(2)
    P = HPolytope(2, [[1, 0], [-1, 0], [0, 1], [0, -1]], [0, -1, 0, -1])
    return StackyPolytope(Q, P, [(1, 0), (-1, 0), (0, 1), (0, -1)])


def weighted_triangle() -> StackyPolytope:
    """Triangle with vertices (0,0), (2,0), (0,1): normal ``(-1,-2)`` gives an orbifold point."""
    Q = QuasiLattice.standard(2)
    P = HPolytope(2, [[1, 0], [0, 1], [-1, -2]], [0, 0, -2])
    return StackyPolytope(Q, P, [(1, 0), (0, 1), (-1, -2)])


def quasi_triangle(d: int = 2) -> StackyPolytope:
    """Triangle whose third normal is ``(-1, -sqrt d)`` over ``Z^3 -> R^2``."""
    r = root(d)
    Q = QuasiLattice(FgAbelianGroup(3), 2, Matrix([[1, 0, -1], [0, 1, -r]]))
    P = HPolytope(2, [[1, 0], [0, 1], [-1, -r]], [0, 0, -1])
    return StackyPolytope(Q, P, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])


def quasi_square(d: int = 3) -> StackyPolytope:
    """A quadrilateral with one irrational normal ``(-1, -sqrt d)``."""
    r = root(d)
    Q = QuasiLattice(FgAbelianGroup(4), 2, Matrix([[1, 0, 0, -1], [0, 1, -1, -r]]))
    P = HPolytope(2, [[1, 0], [0, 1], [0, -1], [-1, -r]], [0, 0, -1, -2])
    return StackyPolytope(Q, P, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])


def point_polytope() -> StackyPolytope:
    """``{eta >= 0, -eta >= 0}``: one point where 0 is not a regular value."""
    Q = QuasiLattice(FgAbelianGroup(1), 1, Matrix([[1]]))
    P = HPolytope(1, [[1], [-1]], [0, 0])
    return StackyPolytope(Q, P, [(1,), (-1,)])


CATALOG = {
    "rational-interval": rational_interval,
    "interval-2": lambda: rational_interval(2),
    "quasi-interval": quasi_interval,
    "triangle": triangle,
    "square": square,
    "weighted-triangle": weighted_triangle,
    "quasi-triangle": quasi_triangle,
    "quasi-square": quasi_square,
    "point": point_polytope,
}
