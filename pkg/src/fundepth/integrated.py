"""Univariate depths, their grid integrals, and the kernel (h-) depth.

The integrated depth of a curve is the quadrature average of a univariate
depth applied column by column, which keeps it strictly positive wherever
the curve stays inside the pointwise range of the data.  Three univariate
kinds are provided; all are computed from exact comparison counts, so the
integrated values depend only on pointwise order relations and are invariant
under strictly increasing transformations applied per coordinate.
"""

from __future__ import annotations

from typing import Callable, Optional

import numpy as np
from scipy.spatial.distance import pdist

from .errors import DegenerateSampleError, ParameterError
from .grid import FunctionalSample, integrate
from .validation import as_curve, as_vector, positive_float

UNIVARIATE_KINDS = ("halfspace", "simplicial", "spatial")


def _univariate_from_counts(kind: str, le, lt, n):
    """Depth from counts of entries <= x and < x; works on scalars or arrays."""
    if kind == "halfspace":
        return np.minimum(le, n - lt) / n
    if kind == "simplicial":
        return 2.0 * le * (n - lt) / (n * n)
    if kind == "spatial":
        # lt - gt = lt - (n - le); a tie at x contributes to neither side
        return 1.0 - np.abs(lt + le - n) / n
    raise ParameterError(f"unknown univariate depth kind {kind!r}; choose from {UNIVARIATE_KINDS}")


def univariate_depth(kind: str, x: float, column) -> float:
    """Depth of the scalar ``x`` within a univariate sample.

    Kinds
    -----
    halfspace  : min(#{X <= x}, #{X >= x}) / n
    simplicial : 2 #{X <= x} #{X >= x} / n**2
    spatial    : 1 - |#{X < x} - #{X > x}| / n

    All three reach their maximum at a sample median and fall off towards
    the tails; ties at ``x`` inflate the value slightly.
    """
    col = as_vector(column, "column")
    n = col.size
    le = int(np.count_nonzero(col <= x))
    lt = int(np.count_nonzero(col < x))
    return float(_univariate_from_counts(kind, le, lt, n))


def integrated_depth(x, sample: FunctionalSample, kind: str = "spatial") -> float:
    """Grid average of a univariate depth applied to every column.

    Parameters
    ----------
    x : array_like
        Curve of length ``sample.d``.
    sample : FunctionalSample
    kind : str
        One of ``UNIVARIATE_KINDS``; defaults to the spatial kind, whose
        population value along a pointwise p-quantile curve is 1 - |2p - 1|.
    """
    x = as_curve(x, sample.d)
    n = sample.n
    le = (sample.values <= x[None, :]).sum(axis=0)
    lt = (sample.values < x[None, :]).sum(axis=0)
    vals = _univariate_from_counts(kind, le, lt, n)
    return float(integrate(vals, sample.grid))


def exp_kernel(s):
    """Default kernel exp(-s): positive, decreasing, K(0) = 1."""
    return np.exp(-np.asarray(s, dtype=float))


def weighted_norms(diffs: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """Grid-weighted L2 norms of the rows of ``diffs``."""
    return np.sqrt((diffs * diffs) @ weights)


def median_pairwise_distance(sample: FunctionalSample) -> float:
    """Median grid-weighted L2 distance over all curve pairs."""
    if sample.n < 2:
        raise ParameterError("pairwise distances need at least two curves")
    scaled = sample.values * np.sqrt(sample.grid.weights)[None, :]
    return float(np.median(pdist(scaled)))


def h_depth(
    x,
    sample: FunctionalSample,
    bandwidth: Optional[float] = None,
    kernel: Callable = exp_kernel,
) -> float:
    """Mean kernel weight (1/h) K(dist / h) between ``x`` and the sample.

    Distances are grid-weighted L2.  When ``bandwidth`` is None it defaults
    to the median pairwise distance of the sample; a sample whose curves
    all coincide has no usable scale and raises ``DegenerateSampleError``.
    Values lie in (0, K(0)/h].
    """
    x = as_curve(x, sample.d)
    if bandwidth is None:
        bandwidth = median_pairwise_distance(sample)
        if bandwidth <= 0:
            raise DegenerateSampleError(
                "median pairwise distance is zero; pass an explicit bandwidth"
            )
    else:
        bandwidth = positive_float(bandwidth, "bandwidth")
    dists = weighted_norms(x[None, :] - sample.values, sample.grid.weights)
    return float(np.mean(kernel(dists / bandwidth) / bandwidth))
