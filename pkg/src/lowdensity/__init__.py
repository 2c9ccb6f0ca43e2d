"""Density-aware sparse signal recovery.

The delta-density delta(x) = ||x||_1 / ||x||_inf refines the sparsity count
||x||_0: it is small not only for signals with few nonzeros but also for
signals whose energy concentrates in a few dominant entries.  This package
computes the measure, certifies kernel exclusion, uncertainty and greedy
recovery from dictionary coherence, runs orthogonal matching pursuit, and
validates everything against brute-force oracles.
"""

from .certificates import (
    GuaranteeReport,
    IterationCheck,
    KernelCertificate,
    UncertaintyReport,
    alpha_decay_iteration_bound,
    classical_omp_threshold,
    kernel_certificate,
    omp_guarantee,
    onb_uncertainty_bound,
    uncertainty_check,
)
from .coherence import (
    CoherenceReport,
    CrossCoherenceBound,
    GramConditioningBound,
    LinfBounds,
    MutualCoherenceReport,
    coherence,
    cross_coherence_bound,
    gram_conditioning_bound,
    linf_density_bounds,
    mutual_coherence,
)
from .core import (
    Dictionary,
    Signal,
    SupportSet,
    as_signal,
    as_support,
    complex_gaussian,
    concat_dictionaries,
    derive_rng,
    hadamard_dictionary,
    identity_dictionary,
    make_dictionary,
    make_rng,
    random_unit_dictionary,
)
from .density import (
    DensityReport,
    TriangleCounterexample,
    delta_density,
    density_report,
    make_alpha_decaying,
    sparsity,
    triangle_counterexample,
    truncate_to_largest,
)
from .errors import (
    AlphaOutOfRangeError,
    DimensionMismatchError,
    EmptyRemainingError,
    EmptySupportError,
    FileFormatError,
    KOutOfRangeError,
    LowDensityError,
    NonFiniteError,
    NonPositiveMuError,
    NotNormalizedError,
    NotPowerOfTwoError,
    RankDeficientError,
    RowMismatchError,
    TMaxOutOfRangeError,
    TooLargeError,
    TrivialKernelError,
    ZeroColumnError,
    ZeroSignalError,
)
from .fileio import read_matrix, read_signal, write_matrix, write_signal
from .omp import LeastSquaresFit, OmpTrace, least_squares_on_support, omp_run, omp_select
from .oracle import (
    ExhaustiveRecovery,
    KernelProbeResult,
    exhaustive_sparse_recovery,
    nullspace_basis,
    probe_kernel_density,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaOutOfRangeError",
    "CoherenceReport",
    "CrossCoherenceBound",
    "DensityReport",
    "Dictionary",
    "DimensionMismatchError",
    "EmptyRemainingError",
    "EmptySupportError",
    "ExhaustiveRecovery",
    "FileFormatError",
    "GramConditioningBound",
    "GuaranteeReport",
    "IterationCheck",
    "KOutOfRangeError",
    "KernelCertificate",
    "KernelProbeResult",
    "LeastSquaresFit",
    "LinfBounds",
    "LowDensityError",
    "MutualCoherenceReport",
    "NonFiniteError",
    "NonPositiveMuError",
    "NotNormalizedError",
    "NotPowerOfTwoError",
    "OmpTrace",
    "RankDeficientError",
    "RowMismatchError",
    "Signal",
    "SupportSet",
    "TMaxOutOfRangeError",
    "TooLargeError",
    "TriangleCounterexample",
    "TrivialKernelError",
    "UncertaintyReport",
    "ZeroColumnError",
    "ZeroSignalError",
    "alpha_decay_iteration_bound",
    "as_signal",
    "as_support",
    "classical_omp_threshold",
    "coherence",
    "complex_gaussian",
    "concat_dictionaries",
    "cross_coherence_bound",
    "delta_density",
    "density_report",
    "derive_rng",
    "exhaustive_sparse_recovery",
    "gram_conditioning_bound",
    "hadamard_dictionary",
    "identity_dictionary",
    "kernel_certificate",
    "least_squares_on_support",
    "linf_density_bounds",
    "make_alpha_decaying",
    "make_dictionary",
    "make_rng",
    "mutual_coherence",
    "nullspace_basis",
    "omp_guarantee",
    "omp_run",
    "omp_select",
    "onb_uncertainty_bound",
    "probe_kernel_density",
    "random_unit_dictionary",
    "read_matrix",
    "read_signal",
    "sparsity",
    "triangle_counterexample",
    "truncate_to_largest",
    "uncertainty_check",
    "write_matrix",
    "write_signal",
]
