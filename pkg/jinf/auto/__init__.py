"""
JINF Automorphisms Package

Automorphism types of J∞, the non-regular construction, reconstruction of
the induced permutation on a component, and order automorphisms.
"""

from jinf.auto.automorphisms import (
    COMPLEMENT,
    Automorphism,
    AutomorphismOracle,
    NonRegularityCertificate,
    Piece,
    PiecewiseAutomorphism,
    RegularAutomorphism,
    apply_auto,
    as_oracle,
    build_example_one,
    complement_of,
    swap_permutation,
    verify_certificate,
)
from jinf.auto.order import (
    OrderVerdict,
    check_covering_preservation,
    check_intersection_preservation,
    check_kneser_preservation,
    check_order_preserving_on_samples,
    order_sigma,
    reconstruct_order_automorphism,
    reconstruct_order_preserving,
)
from jinf.auto.reconstruction import (
    CaseTag,
    ExactifySearch,
    Inconclusive,
    base_independence_check,
    classify_case,
    exactify_permutation,
    reconstruct_component_map,
    reconstruct_sigma,
    verify_restriction,
)

__all__ = [
    "COMPLEMENT",
    "Automorphism",
    "AutomorphismOracle",
    "NonRegularityCertificate",
    "Piece",
    "PiecewiseAutomorphism",
    "RegularAutomorphism",
    "apply_auto",
    "as_oracle",
    "build_example_one",
    "complement_of",
    "swap_permutation",
    "verify_certificate",
    "OrderVerdict",
    "check_covering_preservation",
    "check_intersection_preservation",
    "check_kneser_preservation",
    "check_order_preserving_on_samples",
    "order_sigma",
    "reconstruct_order_automorphism",
    "reconstruct_order_preserving",
    "CaseTag",
    "ExactifySearch",
    "Inconclusive",
    "base_independence_check",
    "classify_case",
    "exactify_permutation",
    "reconstruct_component_map",
    "reconstruct_sigma",
    "verify_restriction",
]
