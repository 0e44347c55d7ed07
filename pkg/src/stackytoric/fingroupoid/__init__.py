"""Exhaustive checks for crossed-module actions on finite groupoids."""

from .actions import (ActionGroupoidForm, ActionReport, CrossedAction, FiniteCrossedModule,
                      RegularityVerdict, classify_action_groupoid, leafwise_transitive,
                      regular_action, validate_action)
from .groupoids import (FiniteGroupoid, GroupoidMorphism, MoritaVerdict, Violation,
                        check_morita, groupoid_invariants, isotropy_report, weak_fibre_product)
from .groups import FiniteGroup, is_homomorphism, sort_key
from .moves import (CrossedMoritaCheck, CrossedMorphism, MoveResult, check_crossed_morita,
                    extend_move, finite_morita_moves, literal_quotient_move, quotient_lifts,
                    quotient_move, restrict_move)
from .reduction import (PrincipalVerdict, action_functor, check_principal, freeness_witness,
                        obstruction_groupoid, quotient_map, reduction_groupoid)

__all__ = [
    "ActionGroupoidForm", "ActionReport", "CrossedAction", "FiniteCrossedModule",
    "RegularityVerdict", "classify_action_groupoid", "leafwise_transitive", "regular_action",
    "validate_action", "FiniteGroupoid", "GroupoidMorphism", "MoritaVerdict", "Violation",
    "check_morita", "groupoid_invariants", "isotropy_report", "weak_fibre_product",
    "FiniteGroup", "is_homomorphism", "sort_key", "CrossedMoritaCheck", "CrossedMorphism",
    "MoveResult", "check_crossed_morita", "extend_move", "finite_morita_moves",
    "literal_quotient_move", "quotient_lifts", "quotient_move", "restrict_move",
    "PrincipalVerdict", "action_functor", "check_principal", "freeness_witness",
    "obstruction_groupoid", "quotient_map", "reduction_groupoid",
]
