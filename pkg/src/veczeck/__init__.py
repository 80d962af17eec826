"""Zeckendorf-style representations for k-bonacci vectors.

Every integer vector in Z^(k-1) has a unique decomposition into distinct
k-bonacci vectors with no k consecutive indices.  This package computes
those decompositions by several strategies, bounds the largest index
needed, and checks the combinatorial statistics of the representable
sets layer by layer.
"""

from .core import (
    KBonacciContext,
    Norms,
    OpCounter,
    kbonacci_number,
    kbonacci_vector,
    vector_norms,
)
from .errors import (
    ConvergenceFailure,
    DivisionByNonUnit,
    IndexOutOfDomain,
    JBoundTooSmall,
    KBonacciError,
    MultipleFound,
    NormalizationDiverged,
    NotFound,
    NotSatisfying,
    ReconstructionMismatch,
    StrategyMismatch,
    ZeroVector,
)
from .genfunc import (
    RationalPowerSeries,
    exact_mean,
    exact_variance,
    f_fix_bivariate_check,
    series_A,
    series_B,
    series_C,
)
from .minimality import MinimalityReport, verify_layer_minimality
from .representations import (
    evaluate_vector,
    integer_to_sr_f_inverse,
    is_satisfying,
    iter_satisfying_sets,
    max_index_J,
    project_Sn,
    sr_to_integer_f,
)
from .scalar_greedy import greedy_decompose, scalar_min_summands_bruteforce
from .solver import (
    Decomposition,
    JBound,
    brute_force_sr,
    find_sr,
    find_sr_with_bound,
    is_nsr,
    large_steps_decomposition,
    normalize,
    reference_recursive_sr,
    small_steps_bound,
    small_steps_decomposition,
    vector_greedy,
)
from .spectral import SpectralData, binet_a1, char_poly_roots, compute_spectral_data
from .stats import (
    GapHistogram,
    LayerStats,
    enumerate_layer,
    gap_histogram,
    gap_law_normalization,
    gaussian_diagnostics,
    layer_stats,
    limiting_gap_law,
)

__version__ = "0.1.0"

__all__ = [
    "KBonacciContext",
    "Norms",
    "OpCounter",
    "kbonacci_number",
    "kbonacci_vector",
    "vector_norms",
    "KBonacciError",
    "IndexOutOfDomain",
    "NotSatisfying",
    "ZeroVector",
    "JBoundTooSmall",
    "NormalizationDiverged",
    "NotFound",
    "MultipleFound",
    "StrategyMismatch",
    "ConvergenceFailure",
    "ReconstructionMismatch",
    "DivisionByNonUnit",
    "RationalPowerSeries",
    "series_A",
    "series_B",
    "series_C",
    "exact_mean",
    "exact_variance",
    "f_fix_bivariate_check",
    "MinimalityReport",
    "verify_layer_minimality",
    "evaluate_vector",
    "is_satisfying",
    "iter_satisfying_sets",
    "max_index_J",
    "project_Sn",
    "sr_to_integer_f",
    "integer_to_sr_f_inverse",
    "greedy_decompose",
    "scalar_min_summands_bruteforce",
    "Decomposition",
    "JBound",
    "small_steps_decomposition",
    "small_steps_bound",
    "large_steps_decomposition",
    "vector_greedy",
    "find_sr",
    "find_sr_with_bound",
    "normalize",
    "is_nsr",
    "reference_recursive_sr",
    "brute_force_sr",
    "SpectralData",
    "char_poly_roots",
    "binet_a1",
    "compute_spectral_data",
    "LayerStats",
    "GapHistogram",
    "enumerate_layer",
    "layer_stats",
    "gap_histogram",
    "limiting_gap_law",
    "gap_law_normalization",
    "gaussian_diagnostics",
    "__version__",
]
