"""Spatial depth: one minus the norm of the average unit direction.

The average is over unit vectors pointing from the sample curves towards
the evaluated curve; a curve surrounded evenly on all sides scores near 1,
a curve far outside the data scores near 0.  Unlike the minimum-based
depths this never collapses in high dimensions: it inherits positivity
everywhere the data have full support.
"""

from __future__ import annotations

import numpy as np

from .errors import ParameterError, UndefinedDepthError
from .grid import DepthResult, FunctionalSample
from .validation import as_curve

INNER_PRODUCTS = ("functional-L2", "sequence-l2")


def _weights_for(sample: FunctionalSample, inner_product: str) -> np.ndarray:
    if inner_product == "functional-L2":
        return sample.grid.weights
    if inner_product == "sequence-l2":
        return np.ones(sample.d)
    raise ParameterError(
        f"unknown inner product {inner_product!r}; choose from {INNER_PRODUCTS}"
    )


def spatial_depth(x, sample: FunctionalSample, inner_product: str = "functional-L2") -> float:
    """Spatial depth of ``x`` with respect to the sample.

    Parameters
    ----------
    x : array_like
        Curve of length ``sample.d``.
    sample : FunctionalSample
    inner_product : str
        "functional-L2" uses the grid quadrature weights in norms,
        "sequence-l2" the plain dot product.  On a uniform grid the two
        give identical values since the rescaling cancels.

    Notes
    -----
    Sample curves at zero distance from ``x`` are excluded from the
    average.  When every curve coincides with ``x`` there is no direction
    information at all and ``UndefinedDepthError`` is raised.  Duplicate
    curves among the remaining rows are kept and simply weigh their shared
    direction more.
    """
    x = as_curve(x, sample.d)
    w = _weights_for(sample, inner_product)
    diffs = x[None, :] - sample.values
    norms = np.sqrt((diffs * diffs) @ w)
    keep = norms > 0
    if not keep.any():
        raise UndefinedDepthError("every sample curve coincides with x")
    units = diffs[keep] / norms[keep][:, None]
    mean_unit = units.mean(axis=0)
    return float(1.0 - np.sqrt((mean_unit * mean_unit) @ w))


def spatial_depth_profile(
    sample: FunctionalSample,
    inner_product: str = "functional-L2",
    leave_one_out: bool = True,
) -> DepthResult:
    """Spatial depth of every sample curve with respect to the others.

    With ``leave_one_out`` each row is scored against the remaining n - 1
    rows (requires n >= 3); otherwise against the full sample, where the
    zero-distance self term is dropped by the exclusion rule anyway.
    """
    if leave_one_out and sample.n < 3:
        raise ParameterError("leave-one-out profile needs at least 3 curves")
    values = np.empty(sample.n)
    for i in range(sample.n):
        ref = sample.drop_row(i) if leave_one_out else sample
        values[i] = spatial_depth(sample.row(i), ref, inner_product)
    return DepthResult(
        kind="sd",
        values=values,
        range_hi=1.0,
        meta={
            "inner_product": inner_product,
            "leave_one_out": leave_one_out,
            "n": sample.n,
        },
    )
