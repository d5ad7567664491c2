"""Growth functions of graph monoids, right-angled Artin groups and right-angled Coxeter groups.

Rational functions are returned as ``(numerator, denominator)`` coefficient lists,
constant term first. Structures are named ``"monoid"``, ``"raag"`` or ``"racg"``.
"""

from ._core import (
    EnumerationCapExceeded,
    Graph,
    GraphError,
    clique_polynomial,
    count_elements,
    count_geodesics,
    expand,
    geodesic_gf,
    geodesic_type_series,
    link_regular_profile,
    relations,
    spherical_gf,
    spherical_type_series,
    verify,
)

__all__ = [
    "EnumerationCapExceeded",
    "Graph",
    "GraphError",
    "clique_polynomial",
    "count_elements",
    "count_geodesics",
    "expand",
    "geodesic_gf",
    "geodesic_type_series",
    "link_regular_profile",
    "relations",
    "spherical_gf",
    "spherical_type_series",
    "verify",
]
