"""Reduction ``G x^H R`` of a crossed-module action and its principality."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import FreenessViolation, MorphismError
from .actions import CrossedAction, FiniteCrossedModule, _require_valid
from .groupoids import FiniteGroupoid, GroupoidMorphism, check_morita, weak_fibre_product
from .groups import sort_key


def freeness_witness(cm: FiniteCrossedModule, R: FiniteGroupoid, a: CrossedAction):
    """A pair ``(h, f)`` with ``h != 1`` and ``h*f = f``, or None."""
    for h in sorted(cm.H.elements, key=sort_key):
        if h == cm.H.identity:
            continue
        for f in R.arrows:
            if a.h1[h, f] == f:
                return (h, f)
    return None


def _canonical(cm: FiniteCrossedModule, a: CrossedAction):
    G, H = cm.G, cm.H
    cache = {}

    def rep(g, f):
        key = (g, f)
        if key not in cache:
            orbit = [(G.mul(g, G.inv(cm.bd(h))), a.h1[h, f]) for h in H]
            r = min(orbit, key=sort_key)
            for o in orbit:
                cache[o] = r
        return cache[key]

    return rep


def reduction_groupoid(cm: FiniteCrossedModule, R: FiniteGroupoid,
                       a: CrossedAction) -> FiniteGroupoid:
    """The groupoid ``G x^H R`` over ``R0``.

    Arrows are H-orbits of ``(g, f)`` under ``h.(g, f) = (g del(h)^-1, h*f)``,
    labelled by their least representative.  ``[g, f]`` runs from ``s(f)``
    to ``g.t(f)`` and ``[g, f] o [g', f'] = [g g', (g'^-1 * f) o f']``.
    """
    _require_valid(cm, R, a)
    w = freeness_witness(cm, R, a)
    if w is not None:
        raise FreenessViolation("H does not act freely on arrows", witness=list(w))
    G = cm.G
    rep = _canonical(cm, a)
    arrows = sorted({rep(g, f) for g in G for f in R.arrows}, key=sort_key)

    def compose(x, y):
        (g, f), (g2, f2) = x, y
        return rep(G.mul(g, g2), R.comp[a.g1[G.inv(g2), f], f2])

    return FiniteGroupoid.build(
        R.objects, arrows,
        s=lambda x: R.s[x[1]],
        t=lambda x: a.g0[x[0], R.t[x[1]]],
        compose=compose,
        unit=lambda x: rep(G.identity, R.unit[x]),
        name=f"{cm.G.name}x^H R")


def quotient_map(cm: FiniteCrossedModule, R: FiniteGroupoid, a: CrossedAction,
                 Q: FiniteGroupoid | None = None) -> GroupoidMorphism:
    """``psi: R -> G x^H R`` with ``psi0 = id`` and ``psi1(f) = [1, f]``."""
    Q = Q or reduction_groupoid(cm, R, a)
    rep = _canonical(cm, a)
    return GroupoidMorphism(R, Q, {x: x for x in R.objects},
                            {f: rep(cm.G.identity, f) for f in R.arrows}, "psi")


def action_functor(cm: FiniteCrossedModule, R: FiniteGroupoid, a: CrossedAction,
                   GR: FiniteGroupoid | None = None) -> tuple[FiniteGroupoid, GroupoidMorphism]:
    """``G_. x R`` with the action functor ``((h, g), f) -> h*(g*f)``."""
    GR = GR or FiniteGroupoid.product(cm.two_group(), R, name="G.xR")
    act = GroupoidMorphism(GR, R, {(g, x): a.g0[g, x] for g, x in GR.objects},
                           {((h, g), f): a.h1[h, a.g1[g, f]] for (h, g), f in GR.arrows},
                           "action")
    return GR, act


def _gamma_search(cm, R, a, psi, limit):
    """Yield invariance transformations ``gamma(g, x): psi(x) -> psi(g.x)``.

    Backtracking over the pairs ``(g, x)`` with forward propagation of the
    cocycle identity ``gamma(k, g.x) o gamma(g, x) = gamma(k g, x)`` and a
    naturality check against every arrow ``((h, g), f)`` of ``G_. x R``.
    """
    G, H = cm.G, cm.H
    Q = psi.target
    keys = [(g, x) for x in R.objects for g in sorted(G.elements, key=sort_key)]
    cand = {(g, x): Q.hom(psi.f0[x], psi.f0[a.g0[g, x]]) for g, x in keys}

    def consistent(gam):
        # propagate the cocycle rule to a fixed point
        changed = True
        while changed:
            changed = False
            for (g, x), c in list(gam.items()):
                y = a.g0[g, x]
                for k in G:
                    d = gam.get((k, y))
                    if d is None:
                        continue
                    val = Q.comp[d, c]
                    kg = G.mul(k, g)
                    old = gam.get((kg, x))
                    if old is None:
                        gam[kg, x] = val
                        changed = True
                    elif old != val:
                        return False
        # naturality on arrows whose endpoints are both decided
        for (g, x), c in gam.items():
            for f in R.outgoing(x):
                y = R.t[f]
                for h in H:
                    g2 = G.mul(cm.bd(h), g)
                    d = gam.get((g2, y))
                    if d is None:
                        continue
                    if Q.comp[psi.f1[a.h1[h, a.g1[g, f]]], c] != Q.comp[d, psi.f1[f]]:
                        return False
        return True

    found = 0
    start = {(G.identity, x): Q.unit[psi.f0[x]] for x in R.objects}
    if not consistent(start):
        return

    def rec(gam):
        nonlocal found
        if found >= limit:
            return
        free = next((k for k in keys if k not in gam), None)
        if free is None:
            found += 1
            yield dict(gam)
            return
        for c in cand[free]:
            trial = dict(gam)
            trial[free] = c
            if consistent(trial):
                yield from rec(trial)

    yield from rec(start)


@dataclass
class PrincipalVerdict:
    ok: bool
    essentially_surjective: bool
    invariant: bool
    canonical_morita: bool
    gamma: dict | None = None
    note: str = ("essential surjectivity is checked; the representability "
                 "clause has no finite counterpart")
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def as_dict(self) -> dict:
        return {"ok": self.ok, "essentially_surjective": self.essentially_surjective,
                "invariant": self.invariant, "canonical_morita": self.canonical_morita,
                "note": self.note, **self.details}


def check_principal(psi: GroupoidMorphism, cm: FiniteCrossedModule, a: CrossedAction,
                    gamma_limit: int = 256) -> PrincipalVerdict:
    """Is ``psi: R -> Q`` a principal ``G_.``-bundle for the action ``a`` on R?"""
    R, Q = psi.source, psi.target
    _require_valid(cm, R, a)
    psi.check()
    reached = set()
    for x in R.objects:
        reached |= Q.orbit(psi.f0[x])
    es = reached == set(Q.objects)

    GR, act = action_functor(cm, R, a)
    P = weak_fibre_product(psi, psi, name="Rx^w_QR")
    invariant = False
    tried = 0
    for gam in _gamma_search(cm, R, a, psi, gamma_limit):
        invariant = True
        tried += 1
        f0 = {(g, x): (x, gam[g, x], a.g0[g, x]) for g, x in GR.objects}
        f1 = {((h, g), f): (f, gam[g, R.s[f]], act.f1[(h, g), f]) for (h, g), f in GR.arrows}
        try:
            tau = GroupoidMorphism(GR, P, f0, f1, "tau")
        except MorphismError:
            continue
        if check_morita(tau).ok:
            return PrincipalVerdict(es, es, True, True, gam, details={"gammas_tried": tried})
    return PrincipalVerdict(False, es, invariant, False, None, details={"gammas_tried": tried})


def obstruction_groupoid(cm: FiniteCrossedModule, R: FiniteGroupoid,
                         a: CrossedAction) -> FiniteGroupoid:
    """``(R0 x R0) x^w_{R x R} (G_. x R)`` over the projection-action map.

    Nontrivial isotropy here shows that no reduction exists.
    """
    _require_valid(cm, R, a)
    RR = FiniteGroupoid.product(R, R, name="RxR")
    D = FiniteGroupoid.discrete([(x, y) for x in R.objects for y in R.objects], name="R0xR0")
    incl = GroupoidMorphism(D, RR, {o: o for o in D.objects},
                            {f: (R.unit[f[1][0]], R.unit[f[1][1]]) for f in D.arrows}, "unit")
    GR, act = action_functor(cm, R, a)
    pa = GroupoidMorphism(GR, RR, {(g, x): (x, act.f0[g, x]) for g, x in GR.objects},
                          {(hg, f): (f, act.f1[hg, f]) for hg, f in GR.arrows}, "pr2 x a")
    return weak_fibre_product(incl, pa, name="Y")
