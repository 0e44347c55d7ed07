"""Finite crossed modules and their actions on finite groupoids."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..errors import MorphismError, PreconditionError, StructureError
from .groupoids import FiniteGroupoid, GroupoidMorphism
from .groups import FiniteGroup, is_homomorphism, sort_key


@dataclass(eq=False)
class FiniteCrossedModule:
    """``del: H -> G`` together with ``alpha: G -> Aut(H)``, as tables.

    ``alpha[g, h]`` is the element ``^g h``.
    """

    G: FiniteGroup
    H: FiniteGroup
    boundary: dict
    alpha: dict
    name: str = ""

    def __post_init__(self):
        self.check()

    # -- constructors -------------------------------------------------------
    @classmethod
    def trivial_alpha(cls, G: FiniteGroup, H: FiniteGroup, boundary: dict | Callable,
                      name: str = "") -> "FiniteCrossedModule":
        if callable(boundary):
            boundary = {h: boundary(h) for h in H}
        return cls(G, H, boundary, {(g, h): h for g in G for h in H}, name)

    @classmethod
    def cyclic(cls, n: int, m: int) -> "FiniteCrossedModule":
        """Reduction ``Z/n -> Z/m`` (requires ``m | n``) with trivial alpha."""
        if n % m:
            raise StructureError("reduction Z/n -> Z/m needs m | n", n=n, m=m)
        return cls.trivial_alpha(FiniteGroup.cyclic(m), FiniteGroup.cyclic(n),
                                 lambda h: h % m, f"Z/{n}->Z/{m}")

    @classmethod
    def identity(cls, G: FiniteGroup) -> "FiniteCrossedModule":
        """``id: G -> G`` with G acting on itself by conjugation."""
        return cls(G, G, {g: g for g in G},
                   {(g, h): G.prod(g, h, G.inv(g)) for g in G for h in G}, f"id_{G.name}")

    @classmethod
    def group(cls, G: FiniteGroup) -> "FiniteCrossedModule":
        """``1 -> G``: the group G viewed as a 2-group with trivial arrows."""
        return cls.trivial_alpha(G, FiniteGroup.trivial(), lambda h: G.identity, f"1->{G.name}")

    # -- structure ----------------------------------------------------------
    def act(self, g, h):
        return self.alpha[g, h]

    def bd(self, h):
        return self.boundary[h]

    def kernel(self) -> frozenset:
        return frozenset(h for h in self.H if self.boundary[h] == self.G.identity)

    def image(self) -> frozenset:
        return frozenset(self.boundary[h] for h in self.H)

    def is_abelian(self) -> bool:
        return self.G.is_abelian() and self.H.is_abelian()

    def violations(self) -> list[tuple]:
        G, H, bd, al = self.G, self.H, self.boundary, self.alpha
        if set(bd) != set(H.elements) or any(v not in G for v in bd.values()):
            return [("boundary table", ())]
        if any((g, h) not in al or al[g, h] not in H for g in G for h in H):
            return [("alpha table", ())]
        if not is_homomorphism(bd, H, G):
            return [("boundary is a homomorphism", ())]
        for g in G:
            if len({al[g, h] for h in H}) != len(H):
                return [("alpha(g) is bijective", (g,))]
            for h in H:
                for k in H:
                    if al[g, H.mul(h, k)] != H.mul(al[g, h], al[g, k]):
                        return [("alpha(g) is a homomorphism", (g, h, k))]
        for h in H:
            if al[G.identity, h] != h:
                return [("alpha(1) = id", (h,))]
        for g in G:
            for k in G:
                for h in H:
                    if al[G.mul(g, k), h] != al[g, al[k, h]]:
                        return [("alpha is an action", (g, k, h))]
        for g in G:
            for h in H:
                if bd[al[g, h]] != G.prod(g, bd[h], G.inv(g)):
                    return [("Peiffer: del(^g h) = g del(h) g^-1", (g, h))]
        for h in H:
            for k in H:
                if al[bd[h], k] != H.prod(h, k, H.inv(h)):
                    return [("Peiffer: ^del(h) k = h k h^-1", (h, k))]
        return []

    def check(self) -> None:
        v = self.violations()
        if v:
            raise StructureError(f"crossed module axiom fails: {v[0][0]}",
                                 crossed_module=self.name, law=v[0][0], instance=list(v[0][1]))

    def two_group(self) -> FiniteGroupoid:
        """The groupoid of the 2-group: objects G, arrow ``(h, g)`` from g to ``del(h) g``."""
        G, H = self.G, self.H
        arrows = [(h, g) for h in H for g in G]
        return FiniteGroupoid.build(
            G.elements, arrows, s=lambda a: a[1], t=lambda a: G.mul(self.boundary[a[0]], a[1]),
            compose=lambda a, b: (H.mul(a[0], b[0]), b[1]),
            unit=lambda g: (H.identity, g),
            inv=lambda a: (H.inv(a[0]), G.mul(self.boundary[a[0]], a[1])),
            name=f"{self.name}_2grp")


@dataclass(eq=False)
class CrossedAction:
    """Tables ``g0[g, x]``, ``g1[g, f]`` and ``h1[h, f]``."""

    g0: dict
    g1: dict
    h1: dict

    @classmethod
    def from_functions(cls, cm: FiniteCrossedModule, X: FiniteGroupoid, on_objects: Callable,
                       g_on_arrows: Callable, h_on_arrows: Callable) -> "CrossedAction":
        return cls({(g, x): on_objects(g, x) for g in cm.G for x in X.objects},
                   {(g, f): g_on_arrows(g, f) for g in cm.G for f in X.arrows},
                   {(h, f): h_on_arrows(h, f) for h in cm.H for f in X.arrows})


@dataclass
class ActionReport:
    ok: bool
    law: str | None = None
    instance: tuple | None = None
    checked: int = 0

    def __bool__(self):
        return self.ok

    def as_dict(self) -> dict:
        return {"ok": self.ok, "law": self.law,
                "instance": None if self.instance is None else list(self.instance),
                "checked": self.checked}


def _check_tables(cm: FiniteCrossedModule, X: FiniteGroupoid, a: CrossedAction) -> None:
    objs, arrs = set(X.objects), set(X.arrows)
    for g in cm.G:
        for x in X.objects:
            if a.g0.get((g, x)) not in objs:
                raise StructureError("G-action on objects is not a total map into objects",
                                     instance=[g, x])
        for f in X.arrows:
            if a.g1.get((g, f)) not in arrs:
                raise StructureError("G-action on arrows is not a total map into arrows",
                                     instance=[g, f])
    for h in cm.H:
        for f in X.arrows:
            if a.h1.get((h, f)) not in arrs:
                raise StructureError("H-action on arrows is not a total map into arrows",
                                     instance=[h, f])


def validate_action(cm: FiniteCrossedModule, X: FiniteGroupoid, a: CrossedAction) -> ActionReport:
    """Check the crossed-action equations on every tuple.

    Laws are tested in the order action, functor1, functor2, natural1,
    natural2, conjugation; the first failing instance is reported.
    """
    _check_tables(cm, X, a)
    G, H = cm.G, cm.H
    n = 0

    def fail(law, *inst):
        return ActionReport(False, law, inst, n)

    # each of the three maps is a group action
    for x in X.objects:
        n += 1
        if a.g0[G.identity, x] != x:
            return fail("action", "g0", G.identity, x)
    for f in X.arrows:
        n += 1
        if a.g1[G.identity, f] != f or a.h1[H.identity, f] != f:
            return fail("action", "unit", f)
    for g in G:
        for k in G:
            gk = G.mul(g, k)
            for x in X.objects:
                n += 1
                if a.g0[gk, x] != a.g0[g, a.g0[k, x]]:
                    return fail("action", "g0", g, k, x)
            for f in X.arrows:
                n += 1
                if a.g1[gk, f] != a.g1[g, a.g1[k, f]]:
                    return fail("action", "g1", g, k, f)
    for h in H:
        for k in H:
            hk = H.mul(h, k)
            for f in X.arrows:
                n += 1
                if a.h1[hk, f] != a.h1[h, a.h1[k, f]]:
                    return fail("action", "h1", h, k, f)
    # functor1: g*u(x) = u(g.x), g.s(f) = s(g*f), g.t(f) = t(g*f)
    for g in G:
        for x in X.objects:
            n += 1
            if a.g1[g, X.unit[x]] != X.unit[a.g0[g, x]]:
                return fail("functor1", g, x)
        for f in X.arrows:
            n += 1
            gf = a.g1[g, f]
            if a.g0[g, X.s[f]] != X.s[gf] or a.g0[g, X.t[f]] != X.t[gf]:
                return fail("functor1", g, f)
    # functor2: g*(f1 o f2) = (g*f1) o (g*f2)
    for g in G:
        for (f1, f2), c in X.comp.items():
            n += 1
            if a.g1[g, c] != X.comp.get((a.g1[g, f1], a.g1[g, f2])):
                return fail("functor2", g, f1, f2)
    # natural1: s(h*f) = s(f), t(h*f) = del(h).t(f)
    for h in H:
        dh = cm.bd(h)
        for f in X.arrows:
            n += 1
            hf = a.h1[h, f]
            if X.s[hf] != X.s[f] or X.t[hf] != a.g0[dh, X.t[f]]:
                return fail("natural1", h, f)
    # natural2: h*f = (h*u(t f)) o f = (del(h)*f) o (h*u(s f))
    for h in H:
        dh = cm.bd(h)
        for f in X.arrows:
            n += 1
            hf = a.h1[h, f]
            left = X.comp.get((a.h1[h, X.unit[X.t[f]]], f))
            right = X.comp.get((a.g1[dh, f], a.h1[h, X.unit[X.s[f]]]))
            if hf != left or hf != right:
                return fail("natural2", h, f)
    # conjugation: g*(h*f) = (^g h)*(g*f)
    for g in G:
        for h in H:
            gh = cm.act(g, h)
            for f in X.arrows:
                n += 1
                if a.g1[g, a.h1[h, f]] != a.h1[gh, a.g1[g, f]]:
                    return fail("conjugation", g, h, f)
    return ActionReport(True, None, None, n)


def _require_valid(cm, X, a) -> None:
    rep = validate_action(cm, X, a)
    if not rep.ok:
        raise PreconditionError(f"not a crossed action: {rep.law} fails",
                                law=rep.law, instance=list(rep.instance))


def leafwise_transitive(cm: FiniteCrossedModule, X: FiniteGroupoid, a: CrossedAction) -> bool:
    """Does the del(H)-orbit of every object equal its groupoid orbit?

    With zero-dimensional spaces the infinitesimal condition is vacuous, so
    this orbit equality is the whole content of leafwise transitivity.
    """
    img = cm.image()
    return all({a.g0[g, x] for g in img} == set(X.orbit(x)) for x in X.objects)


@dataclass
class RegularityVerdict:
    ok: bool
    free_on_objects: bool
    leafwise_transitive: bool
    stabilizers_in_kernel: bool
    witness: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def as_dict(self) -> dict:
        return {"ok": self.ok, "free_on_objects": self.free_on_objects,
                "leafwise_transitive": self.leafwise_transitive,
                "stabilizers_in_kernel": self.stabilizers_in_kernel,
                "witness": self.witness,
                "note": "leafwise transitivity tested as orbit equality; "
                        "the local condition is vacuous for finite models"}


def regular_action(cm: FiniteCrossedModule, X: FiniteGroupoid, a: CrossedAction) -> RegularityVerdict:
    G = cm.G
    witness = {}
    free = True
    for g in G:
        if g == G.identity:
            continue
        x = next((x for x in X.objects if a.g0[g, x] == x), None)
        if x is not None:
            free = False
            witness["fixed_object"] = [g, x]
            break
    lt = leafwise_transitive(cm, X, a)
    ker = cm.kernel()
    in_ker = True
    for h in cm.H:
        if h in ker:
            continue
        f = next((f for f in X.arrows if a.h1[h, f] == f), None)
        if f is not None:
            in_ker = False
            witness["fixed_arrow"] = [h, f]
            break
    return RegularityVerdict(free and lt and in_ker, free, lt, in_ker, witness)


@dataclass
class ActionGroupoidForm:
    """``X`` identified with ``H/Z |x X0`` via ``(hZ, x) -> h*u(x)``."""

    Z: frozenset
    quotient: FiniteGroup
    projection: dict
    normal_form: FiniteGroupoid
    isomorphism: GroupoidMorphism

    def as_dict(self) -> dict:
        return {"Z": sorted(self.Z, key=sort_key), "quotient_order": len(self.quotient),
                "arrows": len(self.normal_form.arrows), "verified": True}


def classify_action_groupoid(cm: FiniteCrossedModule, X: FiniteGroupoid,
                             a: CrossedAction) -> ActionGroupoidForm | None:
    """Put a leafwise transitive abelian action in action-groupoid normal form.

    Z is the common stabilizer of the unit arrows; it must act trivially on
    objects.  Returns None when no such normal form exists.
    """
    _require_valid(cm, X, a)
    if not leafwise_transitive(cm, X, a):
        raise PreconditionError("action is not leafwise transitive")
    if not cm.is_abelian():
        raise PreconditionError("crossed module is not abelian")
    H = cm.H
    stabs = {frozenset(h for h in H if a.h1[h, X.unit[x]] == X.unit[x]) for x in X.objects}
    if len(stabs) != 1:
        return None
    (Z,) = stabs
    if any(a.g0[cm.bd(z), x] != x for z in Z for x in X.objects):
        return None
    Q, proj = H.quotient(Z, name=f"{H.name}/Z")
    NF = FiniteGroupoid.action(Q, X.objects, lambda q, x: a.g0[cm.bd(q), x],
                               name=f"{Q.name}|x X0")
    f1 = {(q, x): a.h1[q, X.unit[x]] for q, x in NF.arrows}
    if len(set(f1.values())) != len(X.arrows) or len(NF.arrows) != len(X.arrows):
        return None
    try:
        phi = GroupoidMorphism(NF, X, {x: x for x in X.objects}, f1, "normal form")
    except MorphismError:
        return None
    return ActionGroupoidForm(Z, Q, proj, NF, phi)
