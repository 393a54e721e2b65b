"""Exact topological invariants of links of isolated hypersurface singularities.

Thin re-export of the compiled core; all arithmetic is exact (big integers
cross the boundary as Python ints, rationals as (numerator, denominator)
tuples).
"""

from brieskorn._core import (  # noqa: F401
    BudgetError,
    InternalError,
    __version__,
    alexander_for_pairs,
    alexander_iterated,
    alexander_torus_knot,
    boundary_homology,
    branch_milnor_number,
    cable_presentation,
    casson_invariant,
    characteristic_factorization,
    characteristic_pairs,
    characteristic_polynomial,
    determinant,
    euler_characteristic_boundary,
    geometry_type,
    intersection_matrix,
    intersection_multiplicity,
    is_homology_3_sphere,
    is_homotopy_sphere,
    is_negative_definite,
    link_connectivity,
    matrix_signature,
    milnor_number,
    monodromy_spectrum,
    named_graph,
    picard_lefschetz_self_intersection,
    signature,
    signature_parts,
    smith_normal_form,
    sphere_class,
)

__all__ = [
    "BudgetError",
    "InternalError",
    "alexander_for_pairs",
    "alexander_iterated",
    "alexander_torus_knot",
    "boundary_homology",
    "branch_milnor_number",
    "cable_presentation",
    "casson_invariant",
    "characteristic_factorization",
    "characteristic_pairs",
    "characteristic_polynomial",
    "determinant",
    "euler_characteristic_boundary",
    "geometry_type",
    "intersection_matrix",
    "intersection_multiplicity",
    "is_homology_3_sphere",
    "is_homotopy_sphere",
    "is_negative_definite",
    "link_connectivity",
    "matrix_signature",
    "milnor_number",
    "monodromy_spectrum",
    "named_graph",
    "picard_lefschetz_self_intersection",
    "signature",
    "signature_parts",
    "smith_normal_form",
    "sphere_class",
]
