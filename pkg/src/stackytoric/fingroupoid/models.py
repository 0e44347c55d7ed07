"""Small ready-made crossed-module actions used in examples and tests."""

from __future__ import annotations

from dataclasses import dataclass

from .actions import CrossedAction, FiniteCrossedModule
from .groupoids import FiniteGroupoid
from .groups import FiniteGroup


@dataclass(eq=False)
class FiniteModel:
    name: str
    cm: FiniteCrossedModule
    X: FiniteGroupoid
    action: CrossedAction


def translation_model(n: int, m: int, k: int | None = None) -> FiniteModel:
    """``Z/n -> Z/m`` acting on ``Z/k |x Z/m`` (default ``k = n``).

    ``Z/k`` acts on the objects ``Z/m`` by translation mod m, G translates
    objects and arrows, and H translates the group part of arrows through
    ``Z/n -> Z/k``.
    """
    k = n if k is None else k
    cm = FiniteCrossedModule.cyclic(n, m)
    X = FiniteGroupoid.action(FiniteGroup.cyclic(k), range(m), lambda a, x: (a + x) % m,
                              name=f"Z/{k}|xZ/{m}")
    act = CrossedAction.from_functions(
        cm, X, lambda g, x: (g + x) % m,
        lambda g, f: (f[0], (g + f[1]) % m),
        lambda h, f: ((h + f[0]) % k, f[1]))
    return FiniteModel(f"Z/{n}->Z/{m} on Z/{k}|xZ/{m}", cm, X, act)


def point_model(n: int, m: int = None) -> FiniteModel:
    """``Z/n -> Z/m`` acting on ``Z/n |x pt``: H translates arrows, G acts trivially."""
    m = n if m is None else m
    cm = FiniteCrossedModule.cyclic(n, m)
    X = FiniteGroupoid.action(FiniteGroup.cyclic(n), ["pt"], lambda a, x: x, name=f"Z/{n}|xpt")
    act = CrossedAction.from_functions(cm, X, lambda g, x: x, lambda g, f: f,
                                       lambda h, f: ((h + f[0]) % n, f[1]))
    return FiniteModel(f"Z/{n}->Z/{m} on Z/{n}|xpt", cm, X, act)


def torsor_model(n: int) -> FiniteModel:
    """``1 -> Z/n`` acting trivially on a point; its reduction is ``B(Z/n)``."""
    cm = FiniteCrossedModule.group(FiniteGroup.cyclic(n))
    X = FiniteGroupoid.discrete(["pt"], name="pt")
    act = CrossedAction.from_functions(cm, X, lambda g, x: x, lambda g, f: f, lambda h, f: f)
    return FiniteModel(f"1->Z/{n} on pt", cm, X, act)


def stabilized_model(n: int) -> FiniteModel:
    """``Z/n -> 1`` acting trivially on a point: every h fixes the unit arrow."""
    cm = FiniteCrossedModule.trivial_alpha(FiniteGroup.trivial(), FiniteGroup.cyclic(n),
                                           lambda h: 0, f"Z/{n}->1")
    X = FiniteGroupoid.discrete(["pt"], name="pt")
    act = CrossedAction.from_functions(cm, X, lambda g, x: x, lambda g, f: f, lambda h, f: f)
    return FiniteModel(f"Z/{n}->1 on pt", cm, X, act)


def free_models() -> list[FiniteModel]:
    return [point_model(2), translation_model(2, 2), translation_model(4, 2),
            torsor_model(3), translation_model(6, 3)]


def non_free_models() -> list[FiniteModel]:
    return [stabilized_model(2), translation_model(4, 2, k=2), stabilized_model(3)]
