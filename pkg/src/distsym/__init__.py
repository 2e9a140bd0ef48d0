"""Exact arithmetic for difference sets, planar distance sets and bisector weights."""

from .brackets import Bracket, exact_bracket, int_nth_root, ln_bracket, nth_root_bracket, sqrt_bracket
from .bisectors import (
    Line,
    SymmetricSubset,
    WeightedBisectorMap,
    bisector_weight_map,
    canonical_line,
    extract_symmetric_subset,
    heaviest_bisector,
    perpendicular_bisector,
    point_on_line,
    reflect_point,
)
from .corpus import verify_corpus
from .bounds import (
    BoundReport,
    VERDICT_HOLDS,
    VERDICT_HOLDS_WITH_CONSTANT,
    VERDICT_VIOLATED,
    abc_lower_report,
    guth_katz_ratio,
    hanson_inclusion_check,
    hanson_witness,
    plunnecke_check,
    product_identity_report,
    thm1_report,
    thm2_report,
)
from .errors import (
    CapExceededError,
    DegeneratePairError,
    EmptyInputError,
    MismatchedInputsError,
    ParseError,
    TooFewPointsError,
)
from .families import FamilySpec, generate_family
from .incidence import (
    IncidenceReport,
    isosceles_count,
    isosceles_count_brute,
    st_bound_report,
    weighted_incidences,
)
from .planar import (
    DistanceSet,
    PlanarPointSet,
    RadiusMultiplicityMap,
    cartesian_square,
    radius_multiplicity_map,
    squared_distance_set,
    verify_product_identity,
)
from .scalar_sets import (
    ScalarSet,
    ab_plus_c_set,
    as_scalar,
    difference_set,
    dilate,
    elementwise_square,
    iterated_combination,
    pairwise_combine,
)

__version__ = "0.1.0"

__all__ = [
    "Bracket",
    "BoundReport",
    "CapExceededError",
    "DegeneratePairError",
    "DistanceSet",
    "EmptyInputError",
    "FamilySpec",
    "IncidenceReport",
    "Line",
    "MismatchedInputsError",
    "ParseError",
    "PlanarPointSet",
    "RadiusMultiplicityMap",
    "ScalarSet",
    "SymmetricSubset",
    "TooFewPointsError",
    "VERDICT_HOLDS",
    "VERDICT_HOLDS_WITH_CONSTANT",
    "VERDICT_VIOLATED",
    "WeightedBisectorMap",
    "ab_plus_c_set",
    "abc_lower_report",
    "as_scalar",
    "bisector_weight_map",
    "canonical_line",
    "cartesian_square",
    "difference_set",
    "dilate",
    "elementwise_square",
    "exact_bracket",
    "extract_symmetric_subset",
    "generate_family",
    "guth_katz_ratio",
    "hanson_inclusion_check",
    "hanson_witness",
    "heaviest_bisector",
    "int_nth_root",
    "isosceles_count",
    "isosceles_count_brute",
    "iterated_combination",
    "ln_bracket",
    "nth_root_bracket",
    "pairwise_combine",
    "perpendicular_bisector",
    "plunnecke_check",
    "point_on_line",
    "product_identity_report",
    "radius_multiplicity_map",
    "reflect_point",
    "squared_distance_set",
    "sqrt_bracket",
    "st_bound_report",
    "thm1_report",
    "thm2_report",
    "verify_corpus",
    "verify_product_identity",
    "weighted_incidences",
]
