"""Exact-arithmetic invariants of twist rim surgery on embedded surfaces.

Knot-group presentations, Alexander polynomials via free differential
calculus, bounded coset enumeration, cyclic branched-cover homology,
and the smooth-vs-topological classifier for twist-surgered surfaces.
"""

from .alexander import (
    AlexMatrix,
    alexander_matrix,
    alexander_of_knot,
    alexander_polynomial,
    fox_derivative,
    torus_alexander,
)
from .covers import (
    INFINITE,
    CoverHomology,
    Infinite,
    branched_cover_order,
    branched_cover_structure,
    cover_homology,
    unbranched_cover_is_homology_circle,
)
from .groups import (
    DEFAULT_COSET_BUDGET,
    AbelianInvariants,
    CosetTable,
    abelianization,
    is_cyclic_of_order,
    smith_invariants,
    tietze_simplify,
    todd_coxeter,
)
from .knots import (
    PD,
    Braid,
    ConnectedSum,
    KnotError,
    KnotExpr,
    KnotSemanticError,
    KnotSyntaxError,
    Mirror,
    TorusKnot,
    Unknot,
    braid_closure_components,
    mirror_braid,
    mirror_pd,
    parse_knot,
    render,
    torus_braid,
)
from .laurent import LaurentPoly, laurent_det, poly_text, resultant_with_cyclotomic
from .surgery import (
    Pi1Verdict,
    SurgeryParams,
    SurgeryReport,
    classify,
    congruent_pm1,
    enumerate_examples,
    ribbon_certificate,
    twist_rim_presentation,
)
from .wirtinger import (
    GroupPresentation,
    mirror_expr,
    presentation_connected_sum,
    presentation_of_knot,
    wirtinger_from_braid,
    wirtinger_from_pd,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianInvariants",
    "AlexMatrix",
    "Braid",
    "ConnectedSum",
    "CosetTable",
    "CoverHomology",
    "DEFAULT_COSET_BUDGET",
    "GroupPresentation",
    "INFINITE",
    "Infinite",
    "KnotError",
    "KnotExpr",
    "KnotSemanticError",
    "KnotSyntaxError",
    "LaurentPoly",
    "Mirror",
    "PD",
    "Pi1Verdict",
    "SurgeryParams",
    "SurgeryReport",
    "TorusKnot",
    "Unknot",
    "abelianization",
    "alexander_matrix",
    "alexander_of_knot",
    "alexander_polynomial",
    "braid_closure_components",
    "branched_cover_order",
    "branched_cover_structure",
    "classify",
    "congruent_pm1",
    "cover_homology",
    "enumerate_examples",
    "fox_derivative",
    "is_cyclic_of_order",
    "laurent_det",
    "mirror_braid",
    "mirror_expr",
    "mirror_pd",
    "parse_knot",
    "poly_text",
    "presentation_connected_sum",
    "presentation_of_knot",
    "render",
    "resultant_with_cyclotomic",
    "ribbon_certificate",
    "smith_invariants",
    "tietze_simplify",
    "todd_coxeter",
    "torus_alexander",
    "torus_braid",
    "twist_rim_presentation",
    "unbranched_cover_is_homology_circle",
    "wirtinger_from_braid",
    "wirtinger_from_pd",
]
