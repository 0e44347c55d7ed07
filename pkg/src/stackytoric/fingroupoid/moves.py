"""Morphisms of finite crossed modules and the three standard Morita moves."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..errors import MorphismError, PreconditionError
from .actions import FiniteCrossedModule
from .groups import FiniteGroup, is_homomorphism, sort_key


@dataclass(eq=False)
class CrossedMorphism:
    source: FiniteCrossedModule
    target: FiniteCrossedModule
    phi_G: dict
    phi_H: dict
    name: str = ""

    def __post_init__(self):
        self.check()

    def check(self) -> None:
        S, T = self.source, self.target
        if not is_homomorphism(self.phi_G, S.G, T.G):
            raise MorphismError("phi_G is not a homomorphism", morphism=self.name)
        if not is_homomorphism(self.phi_H, S.H, T.H):
            raise MorphismError("phi_H is not a homomorphism", morphism=self.name)
        for h in S.H:
            if T.bd(self.phi_H[h]) != self.phi_G[S.bd(h)]:
                raise MorphismError("square with the boundaries does not commute",
                                    morphism=self.name, h=h)
        for g in S.G:
            for h in S.H:
                if self.phi_H[S.act(g, h)] != T.act(self.phi_G[g], self.phi_H[h]):
                    raise MorphismError("phi does not intertwine the actions",
                                        morphism=self.name, g=g, h=h)


@dataclass
class CrossedMoritaCheck:
    ok: bool
    certificate: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok


def check_crossed_morita(m: CrossedMorphism) -> CrossedMoritaCheck:
    """Morita test by enumeration, using both characterizations.

    Criterion: ``G' = del'(H') phi_G(G)`` and ``h -> (phi_H h, del h)`` is a
    bijection ``H -> H' x_G' G``.  Definition: phi induces isomorphisms on
    ``ker del`` and ``coker del``.  The two verdicts are reported separately
    and ``ok`` is the criterion verdict.
    """
    S, T = m.source, m.target
    img = {T.G.mul(T.bd(k), m.phi_G[g]) for k in T.H for g in S.G}
    essential = img == set(T.G.elements)
    fibre = {(k, g) for k in T.H for g in S.G if T.bd(k) == m.phi_G[g]}
    pairs = [(m.phi_H[h], S.bd(h)) for h in S.H]
    bijective = len(set(pairs)) == len(pairs) and set(pairs) == fibre
    criterion = essential and bijective

    kS, kT = S.kernel(), T.kernel()
    ker_map = {m.phi_H[h] for h in kS}
    ker_iso = len(ker_map) == len(kS) and ker_map == set(kT)
    imS, imT = S.image(), T.image()
    # induced map G/del(H) -> G'/del'(H'); injective iff phi_G^-1(del' H') = del H
    coker_inj = {g for g in S.G if m.phi_G[g] in imT} == set(imS)
    coker_surj = essential
    definition = ker_iso and coker_inj and coker_surj
    cert = {
        "essentially_surjective": essential,
        "fibre_bijective": bijective,
        "kernel_orders": [len(kS), len(kT)],
        "cokernel_orders": [len(S.G) // len(imS), len(T.G) // len(imT)],
        "kernel_iso": ker_iso,
        "cokernel_iso": coker_inj and coker_surj,
        "criterion": criterion,
        "definition": definition,
    }
    return CrossedMoritaCheck(criterion, cert)


def _restrict(cm: FiniteCrossedModule, Gs: FiniteGroup, Hs: FiniteGroup, name: str):
    return FiniteCrossedModule(Gs, Hs, {h: cm.bd(h) for h in Hs},
                               {(g, h): cm.act(g, h) for g in Gs for h in Hs}, name)


def restrict_move(cm: FiniteCrossedModule, subgroup) -> tuple[FiniteCrossedModule, CrossedMorphism]:
    """Restrict to ``G' <= G`` with ``H' = del^-1(G')``; needs ``del(H) G' = G``."""
    G = cm.G
    if not G.is_subgroup(subgroup):
        raise PreconditionError("G' is not a subgroup")
    if {G.mul(d, g) for d in cm.image() for g in subgroup} != set(G.elements):
        raise PreconditionError("del(H) G' is not all of G")
    Gs = G.subgroup(subgroup, name="G'")
    Hs = cm.H.subgroup([h for h in cm.H if cm.bd(h) in set(subgroup)], name="H'")
    small = _restrict(cm, Gs, Hs, f"{cm.name}|G'")
    inc = CrossedMorphism(small, cm, {g: g for g in Gs}, {h: h for h in Hs}, "inclusion")
    return small, inc


def extend_move(cm: FiniteCrossedModule, Ghat: FiniteGroup,
                phi: dict) -> tuple[FiniteCrossedModule, CrossedMorphism]:
    """Pull back along a surjection ``phi: Ghat -> G``.

    ``Hhat = H x_G Ghat``, ``del(h, g) = g`` and
    ``^k (h, g) = (^phi(k) h, k g k^-1)``.
    """
    G, H = cm.G, cm.H
    if not is_homomorphism(phi, Ghat, G):
        raise PreconditionError("cover map is not a homomorphism")
    if set(phi.values()) != set(G.elements):
        raise PreconditionError("cover map is not surjective")
    elems = [(h, g) for h in H for g in Ghat if cm.bd(h) == phi[g]]
    Hhat = FiniteGroup.from_function(elems, lambda x, y: (H.mul(x[0], y[0]), Ghat.mul(x[1], y[1])),
                                     "Hhat")
    big = FiniteCrossedModule(
        Ghat, Hhat, {x: x[1] for x in elems},
        {(k, x): (cm.act(phi[k], x[0]), Ghat.prod(k, x[1], Ghat.inv(k))) for k in Ghat for x in elems},
        f"{cm.name}^")
    proj = CrossedMorphism(big, cm, dict(phi), {x: x[0] for x in elems}, "cover")
    return big, proj


def _quotient(cm, N, K, name):
    Gq, pG = cm.G.quotient(N, name="G/N")
    Hq, pH = cm.H.quotient(K, name="H/K")
    bq = {pH[h]: pG[cm.bd(h)] for h in cm.H}
    aq = {(pG[g], pH[h]): pH[cm.act(g, h)] for g in cm.G for h in cm.H}
    for g in cm.G:
        for h in cm.H:
            if aq[pG[g], pH[h]] != pH[cm.act(g, h)] or bq[pH[h]] != pG[cm.bd(h)]:
                raise PreconditionError("quotient data is not well defined")
    small = FiniteCrossedModule(Gq, Hq, bq, aq, name)
    proj = CrossedMorphism(cm, small, pG, pH, "projection")
    return small, proj


def quotient_lifts(cm: FiniteCrossedModule, N) -> list[frozenset]:
    """Normal, alpha-stable ``K <= H`` mapped bijectively onto N by del."""
    N = set(N)
    pre = sorted((h for h in cm.H if cm.bd(h) in N), key=sort_key)
    rest = [h for h in pre if h != cm.H.identity]
    out = []
    for combo in itertools.combinations(rest, len(N) - 1):
        K = frozenset((cm.H.identity,) + combo)
        if ({cm.bd(k) for k in K} == N and cm.H.is_subgroup(K) and cm.H.is_normal(K)
                and all(cm.act(g, k) in K for g in cm.G for k in K)):
            out.append(K)
    return out


def quotient_move(cm: FiniteCrossedModule, N) -> tuple[FiniteCrossedModule, CrossedMorphism]:
    """Divide by a normal ``N <= del(H)`` together with a lift of N to H.

    The lift K must be normal, alpha-stable and mapped isomorphically onto N;
    dividing H by the whole preimage of N would also kill part of ``ker del``.
    """
    N = set(N)
    G = cm.G
    if not (G.is_subgroup(N) and G.is_normal(N)):
        raise PreconditionError("N is not a normal subgroup of G")
    if not N <= cm.image():
        raise PreconditionError("N is not contained in del(H)")
    lifts = quotient_lifts(cm, N)
    if not lifts:
        raise PreconditionError("N has no normal alpha-stable lift to H; the quotient "
                                "move does not apply", N=sorted(N, key=sort_key))
    return _quotient(cm, N, lifts[0], f"{cm.name}/N")


def literal_quotient_move(cm: FiniteCrossedModule, N) -> tuple[FiniteCrossedModule, CrossedMorphism]:
    """Divide H by the full preimage ``del^-1(N)``; Morita only when ``ker del`` is trivial."""
    N = set(N)
    K = frozenset(h for h in cm.H if cm.bd(h) in N)
    return _quotient(cm, N, K, f"{cm.name}//N")


@dataclass
class MoveResult:
    moved: FiniteCrossedModule
    morphism: CrossedMorphism
    check: CrossedMoritaCheck

    def as_dict(self) -> dict:
        return {"G_order": len(self.moved.G), "H_order": len(self.moved.H),
                "morita": self.check.ok, "certificate": self.check.certificate}


def finite_morita_moves(cm: FiniteCrossedModule, subgroup=None, cover=None,
                        normal=None) -> dict[str, MoveResult]:
    """Apply restriction, extension and quotient and verify each connecting morphism.

    Defaults are the identity moves: ``G' = G``, the identity cover and the
    trivial normal subgroup.  ``cover`` is a pair ``(Ghat, phi)``.
    """
    subgroup = cm.G.elements if subgroup is None else subgroup
    Ghat, phi = cover if cover is not None else (cm.G, {g: g for g in cm.G})
    normal = [cm.G.identity] if normal is None else normal
    out = {}
    for name, (moved, mor) in (("restricted", restrict_move(cm, subgroup)),
                               ("extended", extend_move(cm, Ghat, phi)),
                               ("quotient", quotient_move(cm, normal))):
        out[name] = MoveResult(moved, mor, check_crossed_morita(mor))
    return out
