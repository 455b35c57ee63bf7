"""Explicit construction and exact verification of 2-generator quasi-twisted
two-weight codes built from consta-cyclic simplex codes."""

from .analysis import (
    DEFAULT_BUDGET,
    GriesmerReport,
    TwoWeightVerdict,
    WeightDistribution,
    decompose_block_count,
    expected_counts,
    gap_fn,
    griesmer_length,
    griesmer_report,
    is_projective,
    mean_weight_identity_holds,
    min_distance,
    verify_two_weight,
    weight_distribution,
    weight_distribution_of_rows,
)
from .construction import (
    GeneratorMatrix,
    QtCodeSpec,
    SimplexSpec,
    build_qt_simplex,
    build_two_weight,
    codeword_poly,
    default_selection,
    encode,
    full_block_matrix,
    simplex_consta,
    simplex_cyclic,
)
from .errors import BudgetExceededError, ParameterError, VerificationError
from .fields import Field, field_create, field_from_order
from .polynomial import (
    Poly,
    find_primitive,
    is_irreducible,
    is_primitive,
    minimal_polynomial,
    poly_gcd,
    pow_mod,
    x_pow_mod,
)
from .twist_ring import TwistRing, TwistulantMatrix

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "DEFAULT_BUDGET",
    "Field",
    "GeneratorMatrix",
    "GriesmerReport",
    "ParameterError",
    "Poly",
    "QtCodeSpec",
    "SimplexSpec",
    "TwistRing",
    "TwistulantMatrix",
    "TwoWeightVerdict",
    "VerificationError",
    "WeightDistribution",
    "build_qt_simplex",
    "build_two_weight",
    "codeword_poly",
    "decompose_block_count",
    "default_selection",
    "encode",
    "expected_counts",
    "field_create",
    "field_from_order",
    "find_primitive",
    "full_block_matrix",
    "gap_fn",
    "griesmer_length",
    "griesmer_report",
    "is_irreducible",
    "is_primitive",
    "is_projective",
    "mean_weight_identity_holds",
    "min_distance",
    "minimal_polynomial",
    "poly_gcd",
    "pow_mod",
    "simplex_consta",
    "simplex_cyclic",
    "verify_two_weight",
    "weight_distribution",
    "weight_distribution_of_rows",
    "x_pow_mod",
]
