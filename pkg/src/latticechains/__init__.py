"""Exact verification of a q-identity over convex lattice chains.

Chains live in the right triangle with legs i and j = n - i; the package
enumerates them, proves the identity by exact polynomial arithmetic,
cross-checks the probabilistic form by simulation, and searches for
abstract exponent multisets with the same unit-sum property.
"""

from .geometry import (
    ChainPolygon,
    LatticePoint,
    PolygonStats,
    TriangleSpec,
    convex_hull_chain,
    hypotenuse,
    pick_check,
    polygon_stats,
    triangle_interior_points,
)
from .enumeration import (
    CompositionC,
    CompositionD,
    c_to_d,
    composition_to_polygon,
    d_to_c,
    enumerate_C,
    enumerate_D,
    enumerate_polygons,
    polygon_to_composition,
)
from .polyalgebra import (
    QHalfPoly,
    UnitPoly,
    q_monomial,
    term_x_pow_times_one_minus_x_pow,
)
from .verification import (
    IdentityReport,
    lhs_main_via_D,
    lhs_main_via_polygons,
    rhs_main,
    unit_sum,
    unit_sum_process,
    verify_all,
)
from .montecarlo import SimulationConfig, FrequencyTable, compare, exact_prob, simulate
from .explorer import (
    SearchCapExceeded,
    Signature,
    is_unit_multiset,
    match_signature,
    search_unit_multisets,
    triangle_signature,
)

__all__ = [
    "ChainPolygon",
    "CompositionC",
    "CompositionD",
    "FrequencyTable",
    "IdentityReport",
    "LatticePoint",
    "PolygonStats",
    "QHalfPoly",
    "SearchCapExceeded",
    "Signature",
    "SimulationConfig",
    "TriangleSpec",
    "UnitPoly",
    "c_to_d",
    "compare",
    "composition_to_polygon",
    "convex_hull_chain",
    "d_to_c",
    "enumerate_C",
    "enumerate_D",
    "enumerate_polygons",
    "exact_prob",
    "hypotenuse",
    "is_unit_multiset",
    "lhs_main_via_D",
    "lhs_main_via_polygons",
    "match_signature",
    "pick_check",
    "polygon_stats",
    "polygon_to_composition",
    "q_monomial",
    "rhs_main",
    "search_unit_multisets",
    "simulate",
    "term_x_pow_times_one_minus_x_pow",
    "triangle_interior_points",
    "triangle_signature",
    "unit_sum",
    "unit_sum_process",
    "verify_all",
]
