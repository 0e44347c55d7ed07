"""Finite groupoids, functors between them and the weak fibre product.

Arrows compose right to left: ``comp[f, g] = f o g`` is defined when
``s(f) == t(g)``.  Labels are arbitrary hashable values; constructors
pick tuples that make the arrows self-describing.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable

from ..errors import MorphismError, StructureError
from .groups import FiniteGroup, sort_key


@dataclass(frozen=True)
class Violation:
    law: str
    instance: tuple

    def as_dict(self) -> dict:
        return {"law": self.law, "instance": list(self.instance)}


class FiniteGroupoid:
    """A groupoid with finitely many objects and arrows, stored as tables."""

    def __init__(self, objects: Iterable, arrows: Iterable, s: dict, t: dict,
                 comp: dict, inv: dict, unit: dict, name: str = "", check: bool = True):
        self.objects = tuple(objects)
        self.arrows = tuple(arrows)
        self.s = dict(s)
        self.t = dict(t)
        self.comp = dict(comp)
        self.inv = dict(inv)
        self.unit = dict(unit)
        self.name = name
        self._out = defaultdict(list)  # source -> arrows
        self._in = defaultdict(list)  # target -> arrows
        for f in self.arrows:
            if f in self.s and f in self.t:
                self._out[self.s[f]].append(f)
                self._in[self.t[f]].append(f)
        if check:
            self.check()

    # -- construction -------------------------------------------------------
    @classmethod
    def build(cls, objects: Iterable, arrows: Iterable, s: Callable, t: Callable,
              compose: Callable, unit: Callable, inv: Callable | None = None,
              name: str = "", check: bool = True) -> "FiniteGroupoid":
        """Tabulate a groupoid from structure functions.

        ``compose(f, g)`` is only called on pairs with ``s(f) == t(g)``.  When
        ``inv`` is omitted inverses are found by search.
        """
        objects = tuple(objects)
        arrows = tuple(arrows)
        S = {f: s(f) for f in arrows}
        T = {f: t(f) for f in arrows}
        U = {x: unit(x) for x in objects}
        by_target = defaultdict(list)
        for g in arrows:
            by_target[T[g]].append(g)
        comp = {}
        for f in arrows:
            for g in by_target[S[f]]:
                comp[f, g] = compose(f, g)
        if inv is not None:
            I = {f: inv(f) for f in arrows}
        else:
            I = {}
            for f in arrows:
                I[f] = next((g for g in by_target[S[f]]
                             if comp[f, g] == U.get(S[g]) and S[f] == T[g]), None)
        return cls(objects, arrows, S, T, comp, I, U, name=name, check=check)

    @classmethod
    def discrete(cls, objects: Iterable, name: str = "discrete") -> "FiniteGroupoid":
        objects = tuple(objects)
        return cls.build(objects, [("id", x) for x in objects], lambda f: f[1], lambda f: f[1],
                         lambda f, g: f, lambda x: ("id", x), lambda f: f, name=name)

    @classmethod
    def pair(cls, objects: Iterable, name: str = "pair") -> "FiniteGroupoid":
        """The pair groupoid: exactly one arrow ``(y, x)`` from each x to each y."""
        objects = tuple(objects)
        arrows = [(y, x) for x in objects for y in objects]
        return cls.build(objects, arrows, lambda f: f[1], lambda f: f[0],
                         lambda f, g: (f[0], g[1]), lambda x: (x, x),
                         lambda f: (f[1], f[0]), name=name)

    @classmethod
    def bg(cls, G: FiniteGroup, obj="pt", name: str = "") -> "FiniteGroupoid":
        """One object whose arrows are the elements of G."""
        return cls.build([obj], list(G.elements), lambda f: obj, lambda f: obj,
                         G.mul, lambda x: G.identity, G.inv, name=name or f"B{G.name}")

    @classmethod
    def action(cls, G: FiniteGroup, objects: Iterable, act: Callable,
               name: str = "") -> "FiniteGroupoid":
        """Action groupoid ``G |x X``: arrow ``(g, x)`` runs from x to ``g.x``."""
        objects = tuple(objects)
        arrows = [(g, x) for g in G.elements for x in objects]
        return cls.build(objects, arrows, lambda f: f[1], lambda f: act(f[0], f[1]),
                         lambda f, g: (G.mul(f[0], g[0]), g[1]),
                         lambda x: (G.identity, x),
                         lambda f: (G.inv(f[0]), act(f[0], f[1])),
                         name=name or f"{G.name}|x X")

    @classmethod
    def product(cls, X: "FiniteGroupoid", Y: "FiniteGroupoid", name: str = "") -> "FiniteGroupoid":
        objects = [(x, y) for x in X.objects for y in Y.objects]
        arrows = [(f, g) for f in X.arrows for g in Y.arrows]
        return cls.build(objects, arrows,
                         lambda a: (X.s[a[0]], Y.s[a[1]]), lambda a: (X.t[a[0]], Y.t[a[1]]),
                         lambda a, b: (X.comp[a[0], b[0]], Y.comp[a[1], b[1]]),
                         lambda o: (X.unit[o[0]], Y.unit[o[1]]),
                         lambda a: (X.inv[a[0]], Y.inv[a[1]]),
                         name=name or f"{X.name}x{Y.name}")

    # -- queries ------------------------------------------------------------
    def compose(self, f, g):
        try:
            return self.comp[f, g]
        except KeyError:
            raise StructureError("arrows are not composable", f=f, g=g) from None

    def outgoing(self, x) -> list:
        return self._out[x]

    def incoming(self, y) -> list:
        return self._in[y]

    def hom(self, x, y) -> list:
        return [f for f in self._out[x] if self.t[f] == y]

    def orbit(self, x) -> frozenset:
        return frozenset(self.t[f] for f in self._out[x])

    def orbits(self) -> list[frozenset]:
        seen, out = set(), []
        for x in self.objects:
            if x not in seen:
                O = self.orbit(x)
                seen |= O
                out.append(O)
        return out

    def isotropy(self, x) -> list:
        return self.hom(x, x)

    def __len__(self):
        return len(self.arrows)

    def __repr__(self):
        return f"FiniteGroupoid({self.name!r}, objects={len(self.objects)}, arrows={len(self.arrows)})"

    # -- axioms -------------------------------------------------------------
    def violations(self, first: bool = False) -> list[Violation]:
        """Every failed groupoid law, by full enumeration."""
        out: list[Violation] = []

        def bad(law, *inst):
            out.append(Violation(law, inst))
            return first

        objs = set(self.objects)
        arrs = set(self.arrows)
        for f in self.arrows:
            if self.s.get(f) not in objs or self.t.get(f) not in objs:
                if bad("source/target defined", f):
                    return out
        for x in self.objects:
            u = self.unit.get(x)
            if u not in arrs or self.s[u] != x or self.t[u] != x:
                if bad("unit is an endo-arrow", x):
                    return out
        if out:
            return out
        for f in self.arrows:
            for g in self._in[self.s[f]]:
                h = self.comp.get((f, g))
                if h not in arrs:
                    if bad("composition defined", f, g):
                        return out
                elif self.s[h] != self.s[g] or self.t[h] != self.t[f]:
                    if bad("composite source/target", f, g, h):
                        return out
        if out:
            return out
        for f in self.arrows:
            if self.comp[f, self.unit[self.s[f]]] != f or self.comp[self.unit[self.t[f]], f] != f:
                if bad("unit law", f):
                    return out
            i = self.inv.get(f)
            if (i not in arrs or self.s[i] != self.t[f] or self.t[i] != self.s[f]
                    or self.comp[i, f] != self.unit[self.s[f]]
                    or self.comp[f, i] != self.unit[self.t[f]]):
                if bad("inverse law", f):
                    return out
        for f in self.arrows:
            for g in self._in[self.s[f]]:
                fg = self.comp[f, g]
                for h in self._in[self.s[g]]:
                    if self.comp[fg, h] != self.comp[f, self.comp[g, h]]:
                        if bad("associativity", f, g, h):
                            return out
        return out

    def check(self) -> "FiniteGroupoid":
        v = self.violations(first=True)
        if v:
            raise StructureError(f"groupoid axiom fails: {v[0].law}", groupoid=self.name,
                                 law=v[0].law, instance=list(v[0].instance))
        return self


@dataclass
class GroupoidMorphism:
    """A functor given by its object map ``f0`` and arrow map ``f1``."""

    source: FiniteGroupoid
    target: FiniteGroupoid
    f0: dict
    f1: dict
    name: str = ""

    def __post_init__(self):
        self.check()

    @classmethod
    def identity(cls, X: FiniteGroupoid) -> "GroupoidMorphism":
        return cls(X, X, {x: x for x in X.objects}, {f: f for f in X.arrows}, "id")

    @classmethod
    def from_functions(cls, X: FiniteGroupoid, Y: FiniteGroupoid, on_objects: Callable,
                       on_arrows: Callable, name: str = "") -> "GroupoidMorphism":
        return cls(X, Y, {x: on_objects(x) for x in X.objects},
                   {f: on_arrows(f) for f in X.arrows}, name)

    def violations(self, first: bool = False) -> list[Violation]:
        X, Y = self.source, self.target
        out = []
        yo, ya = set(Y.objects), set(Y.arrows)
        for x in X.objects:
            if self.f0.get(x) not in yo:
                out.append(Violation("object map defined", (x,)))
            elif self.f1.get(X.unit[x]) != Y.unit[self.f0[x]]:
                out.append(Violation("preserves units", (x,)))
            if first and out:
                return out
        for f in X.arrows:
            a = self.f1.get(f)
            if a not in ya:
                out.append(Violation("arrow map defined", (f,)))
            elif Y.s[a] != self.f0[X.s[f]] or Y.t[a] != self.f0[X.t[f]]:
                out.append(Violation("preserves source/target", (f,)))
            if first and out:
                return out
        if out:
            return out
        for (f, g), fg in X.comp.items():
            if self.f1[fg] != Y.comp[self.f1[f], self.f1[g]]:
                out.append(Violation("preserves composition", (f, g)))
                if first:
                    return out
        return out

    def check(self) -> None:
        v = self.violations(first=True)
        if v:
            raise MorphismError(f"not a functor: {v[0].law}", morphism=self.name,
                                law=v[0].law, instance=list(v[0].instance))

    def compose(self, other: "GroupoidMorphism") -> "GroupoidMorphism":
        """``self o other``."""
        return GroupoidMorphism(other.source, self.target,
                                {x: self.f0[y] for x, y in other.f0.items()},
                                {f: self.f1[g] for f, g in other.f1.items()})


def weak_fibre_product(phi: GroupoidMorphism, psi: GroupoidMorphism,
                       name: str = "") -> FiniteGroupoid:
    """``X x_Z^(w) Y`` for ``phi: X -> Z`` and ``psi: Y -> Z``.

    Objects are triples ``(x, k, y)`` with ``k: phi(x) -> psi(y)`` in Z.
    An arrow ``(f, k, g)`` starts at ``(s f, k, s g)`` and ends at
    ``(t f, psi(g) o k o phi(f)^-1, t g)``.
    """
    phi.check()
    psi.check()
    X, Y, Z = phi.source, psi.source, phi.target
    if psi.target is not Z and (psi.target.objects != Z.objects or psi.target.arrows != Z.arrows):
        raise MorphismError("the two morphisms have different targets")
    objects = [(x, k, y) for x in X.objects for y in Y.objects
               for k in Z.hom(phi.f0[x], psi.f0[y])]
    arrows = [(f, k, g) for f in X.arrows for g in Y.arrows
              for k in Z.hom(phi.f0[X.s[f]], psi.f0[Y.s[g]])]

    def tgt(a):
        f, k, g = a
        return (X.t[f], Z.comp[Z.comp[psi.f1[g], k], Z.inv[phi.f1[f]]], Y.t[g])

    return FiniteGroupoid.build(
        objects, arrows,
        s=lambda a: (X.s[a[0]], a[1], Y.s[a[2]]),
        t=tgt,
        compose=lambda a, b: (X.comp[a[0], b[0]], b[1], Y.comp[a[2], b[2]]),
        unit=lambda o: (X.unit[o[0]], o[1], Y.unit[o[2]]),
        inv=lambda a: (X.inv[a[0]], tgt(a)[1], Y.inv[a[2]]),
        name=name or f"{X.name}x^w{Y.name}")


@dataclass
class MoritaVerdict:
    ok: bool
    essentially_surjective: bool
    fully_faithful: bool
    witness: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def as_dict(self) -> dict:
        return {"ok": self.ok, "essentially_surjective": self.essentially_surjective,
                "fully_faithful": self.fully_faithful, "witness": self.witness}


def check_morita(phi: GroupoidMorphism) -> MoritaVerdict:
    """Essential surjectivity and full faithfulness by enumeration."""
    phi.check()
    X, Y = phi.source, phi.target
    reached = set()
    for x in X.objects:
        reached |= Y.orbit(phi.f0[x])
    missing = [y for y in Y.objects if y not in reached]
    witness = {}
    if missing:
        witness["unreached_object"] = missing[0]
    ff = True
    for x in X.objects:
        for y in X.objects:
            images = [phi.f1[f] for f in X.hom(x, y)]
            expected = Y.hom(phi.f0[x], phi.f0[y])
            if len(set(images)) != len(images):
                ff = False
                witness["not_faithful"] = [x, y]
            elif set(images) != set(expected):
                ff = False
                witness["not_full"] = [x, y]
            if not ff:
                break
        if not ff:
            break
    return MoritaVerdict(not missing and ff, not missing, ff, witness)


def isotropy_report(X: FiniteGroupoid) -> dict:
    """Order of the isotropy group at every object."""
    return {x: len(X.isotropy(x)) for x in X.objects}


def groupoid_invariants(X: FiniteGroupoid) -> dict:
    """Morita invariants: orbit count and the multiset of isotropy orders per orbit."""
    iso = sorted(len(X.isotropy(min(O, key=sort_key))) for O in X.orbits())
    return {"orbits": len(iso), "isotropy": iso}
