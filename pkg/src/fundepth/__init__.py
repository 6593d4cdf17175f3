"""Data depth for functional and high-dimensional samples.

The package computes curve-level centrality scores (band, half-region,
integrated, projection, spatial, and kernel families), exposes seeded
generators for the stochastic processes used to study them, and ships a
CLI for reproducible dataset-to-report runs.  Depths that rank by whole-
curve envelopes collapse to zero on rough high-resolution data; the
coordinatewise and geometric families stay informative there, and both
behaviours are first-class citizens here rather than numerical accidents.

Estimator classes (scikit-learn style) live in `fundepth.estimators` and
are re-exported lazily, so plain depth computations never import sklearn.
"""

from .band import (
    band_depth,
    band_depth_sup,
    half_region_depth,
    modified_band_depth,
    modified_band_depth_naive,
    modified_band_depth_quantile,
    modified_half_region_depth,
    modified_half_region_depth_quantile,
)
from .errors import (
    DataFormatError,
    DegenerateSampleError,
    FunDepthError,
    GridError,
    NumericalError,
    ParameterError,
    UndefinedDepthError,
)
from .grid import DepthResult, FunctionalSample, Grid, ecdf, integrate, trapezoid_weights
from .integrated import (
    UNIVARIATE_KINDS,
    exp_kernel,
    h_depth,
    integrated_depth,
    median_pairwise_distance,
    univariate_depth,
)
from .io import load_csv, save_csv
from .profiles import DEPTH_KINDS, depth_profile, depth_values
from .projection import (
    DirectionSet,
    SpanDecomposition,
    halfspace_depth,
    halfspace_depth_bound,
    integrated_dual_depth,
    projection_depth,
    random_tukey_depth,
    span_residual,
)
from .report import five_number_summary, render_dotplot_svg, sign_agreement
from .simulate import (
    Link,
    ProcessSpec,
    affine_link,
    apply_link,
    exp_link,
    fbm_covariance,
    gen_gaussian_paths,
    gen_gauss_seq,
    gen_gbm,
    generate,
    identity_link,
    process_covariance,
    quantile_curve,
    sequence_covariance,
)
from .spatial import INNER_PRODUCTS, spatial_depth, spatial_depth_profile

__version__ = "0.1.0"

_ESTIMATOR_NAMES = (
    "BandDepth",
    "ModifiedBandDepth",
    "HalfRegionDepth",
    "ModifiedHalfRegionDepth",
    "IntegratedDepth",
    "HDepth",
    "SpatialDepth",
    "HalfspaceDepth",
    "ProjectionDepth",
    "RandomTukeyDepth",
    "IntegratedDualDepth",
    "ESTIMATORS",
)


def __getattr__(name):
    if name in _ESTIMATOR_NAMES:
        from . import estimators

        return getattr(estimators, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


def __dir__():
    return sorted(list(globals()) + list(_ESTIMATOR_NAMES))


__all__ = [
    "DEPTH_KINDS",
    "INNER_PRODUCTS",
    "UNIVARIATE_KINDS",
    "DataFormatError",
    "DegenerateSampleError",
    "DepthResult",
    "DirectionSet",
    "FunDepthError",
    "FunctionalSample",
    "Grid",
    "GridError",
    "Link",
    "NumericalError",
    "ParameterError",
    "ProcessSpec",
    "SpanDecomposition",
    "UndefinedDepthError",
    "affine_link",
    "apply_link",
    "band_depth",
    "band_depth_sup",
    "depth_profile",
    "depth_values",
    "ecdf",
    "exp_kernel",
    "exp_link",
    "fbm_covariance",
    "five_number_summary",
    "gen_gauss_seq",
    "gen_gaussian_paths",
    "gen_gbm",
    "generate",
    "h_depth",
    "half_region_depth",
    "halfspace_depth",
    "halfspace_depth_bound",
    "identity_link",
    "integrate",
    "integrated_depth",
    "integrated_dual_depth",
    "load_csv",
    "median_pairwise_distance",
    "modified_band_depth",
    "modified_band_depth_naive",
    "modified_band_depth_quantile",
    "modified_half_region_depth",
    "modified_half_region_depth_quantile",
    "process_covariance",
    "projection_depth",
    "quantile_curve",
    "random_tukey_depth",
    "render_dotplot_svg",
    "save_csv",
    "sequence_covariance",
    "sign_agreement",
    "span_residual",
    "spatial_depth",
    "spatial_depth_profile",
    "trapezoid_weights",
    "univariate_depth",
    *_ESTIMATOR_NAMES,
]
