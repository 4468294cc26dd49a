"""dimcurse: make the curse of dimensionality measurable.

Distance-concentration statistics under Minkowski, Chebyshev and cosine
metrics, the closed-form limits they converge to, and covariance-spectrum
diagnostics for the manifold effect, with a deterministic Monte Carlo
experiment harness and a CLI on top.
"""

from .core import (
    BIT_GENERATOR,
    Dataset,
    DensityResult,
    UniformSpec,
    generate_uniform,
    sample_density,
    validate_dataset,
)
from .estimators import ConcentrationAnalyzer, SpectrumAnalyzer
from .exceptions import (
    DataFormatError,
    DegenerateInputError,
    DimcurseError,
    DimensionMismatchError,
    InsufficientDataError,
    NotFittedError,
    NumericalFailureError,
    ParameterError,
    ValidationError,
)
from .metrics import (
    ConcentrationStats,
    Metric,
    chebyshev_distance,
    concentration_stats,
    cosine_similarity,
    minkowski_distance,
    pairwise_cosine_stats,
    query_distances,
)
from .pca import (
    EigenSpectrum,
    ccr_curve,
    covariance,
    eigen_symmetric,
    pcs_to_reach,
    smallest_contribution_curve,
    spectrum_hdlss,
    zero_eigenvalue_count,
)
from .simulate import (
    ExperimentGrid,
    ExperimentRow,
    cell_seed,
    run_chebyshev_experiment,
    run_cosine_experiment,
    run_minkowski_experiment,
    run_pca_experiment,
)
from .theory import (
    RdrBounds,
    chebyshev_expected_max,
    chebyshev_variance,
    cosine_limit,
    eigen_mean_limit,
    minkowski_normalized_limit,
    rdr_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "BIT_GENERATOR",
    "ConcentrationAnalyzer",
    "ConcentrationStats",
    "DataFormatError",
    "Dataset",
    "DegenerateInputError",
    "DensityResult",
    "DimcurseError",
    "DimensionMismatchError",
    "EigenSpectrum",
    "ExperimentGrid",
    "ExperimentRow",
    "InsufficientDataError",
    "Metric",
    "NotFittedError",
    "NumericalFailureError",
    "ParameterError",
    "RdrBounds",
    "SpectrumAnalyzer",
    "UniformSpec",
    "ValidationError",
    "ccr_curve",
    "cell_seed",
    "chebyshev_distance",
    "chebyshev_expected_max",
    "chebyshev_variance",
    "concentration_stats",
    "cosine_limit",
    "cosine_similarity",
    "covariance",
    "eigen_mean_limit",
    "eigen_symmetric",
    "generate_uniform",
    "minkowski_distance",
    "minkowski_normalized_limit",
    "pairwise_cosine_stats",
    "pcs_to_reach",
    "query_distances",
    "rdr_bounds",
    "run_chebyshev_experiment",
    "run_cosine_experiment",
    "run_minkowski_experiment",
    "run_pca_experiment",
    "sample_density",
    "smallest_contribution_curve",
    "spectrum_hdlss",
    "validate_dataset",
    "zero_eigenvalue_count",
]
