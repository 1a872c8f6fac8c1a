"""
Projective plane package.

This package contains prime-order projective planes, their incidence graphs
and the rainbow colorings that realize the C4-free extremal family.
"""
from projective.plane import (
    AxiomViolation,
    ProjectivePlane,
    build_plane,
    canonical_triples,
    is_prime,
    is_prime_power,
    verify_plane_axioms,
)
from projective.incidence import (
    extremal_bound,
    extremal_identity_holds,
    extremal_order,
    girth,
    incidence_graph,
    neighborhood_union_size,
    rainbow_color,
    rainbow_incidence_graph,
)
