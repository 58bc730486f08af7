"""
JINF Graph Package

J∞ (Johnson adjacency) and K∞ (Kneser adjacency) over balanced periodic sets.
"""

from jinf.graph.johnson import (
    Vertex,
    as_vertex,
    adjacent_johnson,
    same_component,
    distance_johnson,
    geodesic,
    incident,
    star_sample,
    top_sample,
    classify_clique,
    Star,
    Top,
    PairAmbiguous,
    NotClique,
    orbit_name,
    orbit_distance,
    star_intersection,
    top_intersection,
    star_top_intersection,
    common_neighbourhood,
    random_vertex,
    random_component_member,
)
from jinf.graph.kneser import (
    KneserPath,
    adjacent_kneser,
    kneser_distance,
    kneser_separation_witness,
    kneser_lower_bound,
    kneser_order_duality,
)

__all__ = [
    "Vertex",
    "as_vertex",
    "adjacent_johnson",
    "same_component",
    "distance_johnson",
    "geodesic",
    "incident",
    "star_sample",
    "top_sample",
    "classify_clique",
    "Star",
    "Top",
    "PairAmbiguous",
    "NotClique",
    "orbit_name",
    "orbit_distance",
    "star_intersection",
    "top_intersection",
    "star_top_intersection",
    "common_neighbourhood",
    "random_vertex",
    "random_component_member",
    "KneserPath",
    "adjacent_kneser",
    "kneser_distance",
    "kneser_separation_witness",
    "kneser_lower_bound",
    "kneser_order_duality",
]
