"""
JINF Oracle Package

Finite ground truth: explicit J(n, k), K(n, k) and truncated J∞
components, with shortest paths, maximal cliques, automorphism counts and
permutation recovery.
"""

from jinf.oracle.finite import (
    CliqueLabel,
    Family,
    FamilyKind,
    FiniteGraph,
    LabelledClique,
    all_pairs_bfs,
    bfs_distance,
    build_johnson_finite,
    build_kneser_finite,
    build_truncated_component,
    export_adjacency,
    label_differences,
    maximal_cliques,
)
from jinf.oracle.automorphism import (
    InducedPermutation,
    aut_group_order,
    automorphism_witness,
    complement_map,
    induced_automorphism,
    induced_permutation_finite,
)

__all__ = [
    "CliqueLabel",
    "Family",
    "FamilyKind",
    "FiniteGraph",
    "LabelledClique",
    "all_pairs_bfs",
    "bfs_distance",
    "build_johnson_finite",
    "build_kneser_finite",
    "build_truncated_component",
    "export_adjacency",
    "label_differences",
    "maximal_cliques",
    "InducedPermutation",
    "aut_group_order",
    "automorphism_witness",
    "complement_map",
    "induced_automorphism",
    "induced_permutation_finite",
]
