import itertools

import pytest

from stackytoric.errors import FreenessViolation, PreconditionError, StructureError
from stackytoric.fingroupoid import (CrossedAction, FiniteCrossedModule, FiniteGroup,
                                     FiniteGroupoid, GroupoidMorphism, check_crossed_morita,
                                     check_morita, check_principal, classify_action_groupoid,
                                     extend_move, finite_morita_moves, groupoid_invariants,
                                     is_homomorphism, isotropy_report, leafwise_transitive,
                                     literal_quotient_move, obstruction_groupoid, quotient_map,
                                     quotient_move, reduction_groupoid, regular_action,
                                     restrict_move, validate_action, weak_fibre_product)
from stackytoric.fingroupoid.models import (free_models, non_free_models, point_model,
                                            stabilized_model, torsor_model, translation_model)


def test_group_constructions():
    Z6 = FiniteGroup.cyclic(6)
    assert Z6.is_abelian() and Z6.order_of(2) == 3
    assert Z6.generated([2]) == frozenset({0, 2, 4})
    Q, proj = Z6.quotient([0, 3])
    assert len(Q) == 3 and is_homomorphism(proj, Z6, Q)
    V = FiniteGroup.product(FiniteGroup.cyclic(2), FiniteGroup.cyclic(2))
    assert sorted(V.element_orders()) == [1, 2, 2, 2]


def test_bad_table_is_rejected():
    with pytest.raises(StructureError):
        FiniteGroup.from_table([[0, 1], [1, 1]])


def test_symmetric_group_is_not_abelian():
    perms = list(itertools.permutations(range(3)))
    S3 = FiniteGroup.from_function(perms, lambda p, q: tuple(p[q[i]] for i in range(3)), "S3")
    assert not S3.is_abelian()
    A3 = [p for p in perms if sum(p[i] > p[j] for i in range(3) for j in range(i + 1, 3)) % 2 == 0]
    assert S3.is_normal(A3)
    assert not S3.is_normal([(0, 1, 2), (1, 0, 2)])


def test_groupoid_axioms_and_invariants():
    X = FiniteGroupoid.action(FiniteGroup.cyclic(4), range(2), lambda a, x: (a + x) % 2)
    assert X.violations() == []
    assert len(X.orbits()) == 1
    assert groupoid_invariants(X) == {"orbits": 1, "isotropy": [2]}
    P = FiniteGroupoid.pair(range(3))
    assert groupoid_invariants(P) == {"orbits": 1, "isotropy": [1]}


def test_broken_composition_reports_triple():
    X = FiniteGroupoid.bg(FiniteGroup.cyclic(3))
    comp = dict(X.comp)
    f, g = X.arrows[1], X.arrows[1]
    comp[f, g] = X.arrows[0]
    with pytest.raises(StructureError) as err:
        FiniteGroupoid(X.objects, X.arrows, X.s, X.t, comp, X.inv, X.unit)
    assert len(err.value.details["instance"]) in (1, 2, 3)


def test_morita_of_groupoid_maps():
    P = FiniteGroupoid.pair(range(3))
    pt = FiniteGroupoid.discrete(["*"])
    collapse = GroupoidMorphism(P, pt, {x: "*" for x in P.objects},
                                {f: ("id", "*") for f in P.arrows})
    assert check_morita(collapse).ok
    BG = FiniteGroupoid.bg(FiniteGroup.cyclic(2))
    to_pt = GroupoidMorphism(BG, pt, {x: "*" for x in BG.objects},
                             {f: ("id", "*") for f in BG.arrows})
    assert not check_morita(to_pt).ok


def test_weak_fibre_product_of_points_over_bg():
    G = FiniteGroup.cyclic(3)
    BG = FiniteGroupoid.bg(G)
    pt = FiniteGroupoid.discrete(["*"])
    incl = GroupoidMorphism(pt, BG, {"*": "pt"}, {("id", "*"): BG.unit["pt"]})
    W = weak_fibre_product(incl, incl)
    # the loop space of BG: a discrete groupoid on |G| objects
    assert len(W.objects) == 3 and len(W.arrows) == 3
    assert W.violations() == []


@pytest.mark.parametrize("model", free_models(), ids=lambda m: m.name)
def test_free_models_reduce_and_are_principal(model):
    cm, X, a = model.cm, model.X, model.action
    assert validate_action(cm, X, a).ok
    R = reduction_groupoid(cm, X, a)
    assert R.violations() == []
    psi = quotient_map(cm, X, a, R)
    verdict = check_principal(psi, cm, a)
    assert verdict.ok and verdict.canonical_morita
    # the quotient arrow count is |G| |X1| / |H| by freeness
    assert len(R.arrows) * len(cm.H) == len(cm.G) * len(X.arrows)


@pytest.mark.parametrize("model", non_free_models(), ids=lambda m: m.name)
def test_non_free_models_have_witnesses(model):
    cm, X, a = model.cm, model.X, model.action
    with pytest.raises(FreenessViolation) as err:
        reduction_groupoid(cm, X, a)
    h, f = err.value.details["witness"]
    assert h != cm.H.identity and a.h1[h, f] == f
    Y = obstruction_groupoid(cm, X, a)
    assert max(isotropy_report(Y).values()) >= 2


def test_z4_z2_reduced_groupoid_shape():
    m = translation_model(4, 2)
    R = reduction_groupoid(m.cm, m.X, m.action)
    assert (len(R.objects), len(R.arrows)) == (2, 4)


def test_torsor_reduces_to_bg():
    m = torsor_model(3)
    R = reduction_groupoid(m.cm, m.X, m.action)
    assert groupoid_invariants(R) == {"orbits": 1, "isotropy": [3]}


def test_identity_quotient_map_on_torsor_is_not_principal():
    m = torsor_model(3)
    ident = GroupoidMorphism.identity(m.X)
    assert not check_principal(ident, m.cm, m.action).ok


def test_trivial_h_action_breaks_naturality():
    m = translation_model(4, 2)
    a = CrossedAction(m.action.g0, m.action.g1, {(h, f): f for h in m.cm.H for f in m.X.arrows})
    rep = validate_action(m.cm, m.X, a)
    assert not rep.ok and rep.law == "natural1"


def test_regularity_and_normal_form():
    m = translation_model(4, 2)
    assert leafwise_transitive(m.cm, m.X, m.action)
    assert regular_action(m.cm, m.X, m.action).ok
    nf = classify_action_groupoid(m.cm, m.X, m.action)
    assert nf.Z == frozenset({0})
    m2 = translation_model(4, 2, k=2)
    assert classify_action_groupoid(m2.cm, m2.X, m2.action).Z == frozenset({0, 2})
    # arrow stabilizers {0, 2} lie in ker del, so the action is regular but not free
    assert regular_action(m2.cm, m2.X, m2.action).ok


def test_regular_yet_not_free():
    m = stabilized_model(2)
    v = regular_action(m.cm, m.X, m.action)
    assert v.ok and v.stabilizers_in_kernel
    with pytest.raises(FreenessViolation):
        reduction_groupoid(m.cm, m.X, m.action)


def test_stabilizer_outside_kernel_breaks_regularity():
    # Z/2 -> Z/2 identity acting trivially on a point: h = 1 fixes the unit
    cm = FiniteCrossedModule.cyclic(2, 2)
    X = FiniteGroupoid.discrete(["pt"])
    a = CrossedAction.from_functions(cm, X, lambda g, x: x, lambda g, f: f, lambda h, f: f)
    v = regular_action(cm, X, a)
    assert not v.ok


def test_crossed_module_axioms():
    FiniteCrossedModule.cyclic(4, 2).check()
    S3 = FiniteGroup.from_function(list(itertools.permutations(range(3))),
                                   lambda p, q: tuple(p[q[i]] for i in range(3)), "S3")
    FiniteCrossedModule.identity(S3).check()
    with pytest.raises(StructureError):
        FiniteCrossedModule.cyclic(4, 3)


def test_default_moves_are_morita():
    for cm in (FiniteCrossedModule.cyclic(4, 2), FiniteCrossedModule.cyclic(6, 3)):
        for res in finite_morita_moves(cm).values():
            assert res.check.ok and res.check.certificate["definition"]


def test_restriction_and_extension():
    cm = FiniteCrossedModule.cyclic(4, 2)
    small, inc = restrict_move(cm, [0])
    assert len(small.H) == 2 and check_crossed_morita(inc).ok
    Z4 = FiniteGroup.cyclic(4)
    big, proj = extend_move(cm, Z4, {g: g % 2 for g in Z4})
    assert check_crossed_morita(proj).ok
    with pytest.raises(PreconditionError):
        restrict_move(FiniteCrossedModule.group(FiniteGroup.cyclic(2)), [0])


def test_quotient_needs_a_lift():
    cm = FiniteCrossedModule.cyclic(4, 2)
    with pytest.raises(PreconditionError):
        quotient_move(cm, [0, 1])
    # the literal quotient kills part of ker del and fails the criterion
    _, proj = literal_quotient_move(cm, [0, 1])
    chk = check_crossed_morita(proj)
    assert not chk.ok and chk.certificate["kernel_orders"] == [2, 1]
    ok = FiniteCrossedModule.identity(FiniteGroup.cyclic(6))
    _, proj = quotient_move(ok, [0, 3])
    assert check_crossed_morita(proj).ok


@pytest.mark.parametrize("model", free_models() + non_free_models(), ids=lambda m: m.name)
def test_models_are_small(model):
    assert len(model.X.arrows) <= 64


def test_point_model_action():
    m = point_model(2)
    assert validate_action(m.cm, m.X, m.action).ok
