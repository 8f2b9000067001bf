"""Linear codes over the four-element non-unital ring I.

Builds defining sets from simplicial complexes over F_2^m, enumerates the
resulting codes with their Lee weight distributions, maps them to binary
codes through the Gray isometry, and certifies minimality,
self-orthogonality, and Griesmer distance optimality.
"""

from .analysis import (
    ALL_ANALYSES,
    AbFinding,
    AnalysisReport,
    GriesmerFinding,
    GriesmerStatus,
    MinimalityFinding,
    OrthogonalityFinding,
    PredictedDistribution,
    PredictionMatch,
    SimplexFinding,
    ThetaFinding,
    ab_condition,
    analyze,
    griesmer_check,
    griesmer_sum,
    is_minimal_exhaustive,
    is_self_orthogonal,
    predicted_distribution,
    simplex_structure,
    theta_conditions,
    verify_against_prediction,
    weights_divisible_by_4,
)
from .construction import (
    DEFAULT_WORK_BUDGET,
    Alphabet,
    CodeParams,
    CodeTable,
    DefiningSet,
    DefiningSetSpec,
    RingVector,
    Variant,
    binary_params,
    build_defining_set,
    check_work_budget,
    defining_set_length,
    encode,
    enumerate_code,
    gray_image,
    weight_enumerator,
)
from .errors import BudgetExceededError, DimensionMismatchError, EmptyDefiningSetError
from .geometry import (
    MAX_DIMENSION,
    BitVector,
    ComplexComplement,
    GeneratingPolynomial,
    SimplicialComplex,
    all_vectors,
    character_sum,
    complex_from_generator,
    complex_from_maximal_faces,
    generating_function,
    gf2_basis,
    support_disjoint,
)
from .ring import A, B, C, ELEMENTS, ZERO, RingElement, addition_table, multiplication_table

__version__ = "0.1.0"

__all__ = [
    "A",
    "ALL_ANALYSES",
    "AbFinding",
    "Alphabet",
    "AnalysisReport",
    "B",
    "BitVector",
    "BudgetExceededError",
    "C",
    "CodeParams",
    "CodeTable",
    "ComplexComplement",
    "DEFAULT_WORK_BUDGET",
    "DefiningSet",
    "DefiningSetSpec",
    "DimensionMismatchError",
    "ELEMENTS",
    "EmptyDefiningSetError",
    "GeneratingPolynomial",
    "GriesmerFinding",
    "GriesmerStatus",
    "MAX_DIMENSION",
    "MinimalityFinding",
    "OrthogonalityFinding",
    "PredictedDistribution",
    "PredictionMatch",
    "RingElement",
    "RingVector",
    "SimplexFinding",
    "SimplicialComplex",
    "ThetaFinding",
    "Variant",
    "ZERO",
    "ab_condition",
    "addition_table",
    "all_vectors",
    "analyze",
    "binary_params",
    "build_defining_set",
    "character_sum",
    "check_work_budget",
    "defining_set_length",
    "complex_from_generator",
    "complex_from_maximal_faces",
    "encode",
    "enumerate_code",
    "generating_function",
    "gf2_basis",
    "gray_image",
    "griesmer_check",
    "griesmer_sum",
    "is_minimal_exhaustive",
    "is_self_orthogonal",
    "multiplication_table",
    "predicted_distribution",
    "simplex_structure",
    "support_disjoint",
    "theta_conditions",
    "verify_against_prediction",
    "weight_enumerator",
    "weights_divisible_by_4",
]
