"""Evaluation grids, functional samples, and depth result containers.

A sample of curves is an (n, d) matrix whose columns line up with a shared
grid of evaluation points.  The grid carries quadrature weights normalised to
sum to one, so integrating any pointwise quantity along a curve is a single
weighted sum and integrated depths stay on the same scale no matter how fine
the discretisation is.  Plain high-dimensional vectors are handled the same
way through a "sequence" grid with uniform weights.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from .errors import DataFormatError, GridError, ParameterError
from .validation import as_matrix, as_vector


def trapezoid_weights(points) -> np.ndarray:
    """Normalised trapezoid quadrature weights for an increasing grid.

    Parameters
    ----------
    points : array_like
        Strictly increasing 1-d grid.

    Returns
    -------
    ndarray
        Positive weights summing to one.  For a single point the weight is 1.

    Examples
    --------
    >>> trapezoid_weights([0.0, 0.5, 1.0])
    array([0.25, 0.5 , 0.25])
    """
    pts = as_vector(points, "points")
    if pts.size == 1:
        return np.ones(1)
    w = np.empty_like(pts)
    w[0] = (pts[1] - pts[0]) / 2.0
    w[-1] = (pts[-1] - pts[-2]) / 2.0
    if pts.size > 2:
        w[1:-1] = (pts[2:] - pts[:-2]) / 2.0
    return w / w.sum()


def _frozen(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=float)
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class Grid:
    """Strictly increasing evaluation points with positive quadrature weights.

    Weights are normalised to sum to one on construction.  When no weights
    are given, trapezoid weights are derived from the spacing, which makes
    equispaced functional grids behave like a Riemann average and leaves a
    single-point grid with weight one.
    """

    points: np.ndarray
    weights: Optional[np.ndarray] = None

    def __post_init__(self):
        pts = as_vector(self.points, "grid points")
        if pts.size > 1 and not np.all(np.diff(pts) > 0):
            raise GridError("grid points must be strictly increasing")
        if self.weights is None:
            w = trapezoid_weights(pts)
        else:
            w = as_vector(self.weights, "grid weights")
            if w.size != pts.size:
                raise GridError(f"{w.size} weights for {pts.size} grid points")
            if not np.all(w > 0):
                raise GridError("grid weights must be strictly positive")
            w = w / w.sum()
        object.__setattr__(self, "points", _frozen(pts))
        object.__setattr__(self, "weights", _frozen(w))

    @classmethod
    def sequence(cls, d: int) -> "Grid":
        """Coordinate grid 1..d with uniform weights 1/d, for vector data."""
        if not isinstance(d, (int, np.integer)) or d < 1:
            raise GridError(f"sequence length must be a positive integer, got {d!r}")
        return cls(np.arange(1, d + 1, dtype=float), np.full(d, 1.0 / d))

    @property
    def size(self) -> int:
        return self.points.size

    def matches(self, other: "Grid") -> bool:
        return np.array_equal(self.points, other.points) and np.array_equal(
            self.weights, other.weights
        )


def integrate(values, grid: Grid):
    """Quadrature of pointwise values against the grid weights.

    ``values`` may be a single curve of length ``grid.size`` (returns a
    float) or a stack of curves with the grid on the last axis (returns an
    array of one fewer dimension).
    """
    v = np.asarray(values, dtype=float)
    if v.shape[-1:] != (grid.size,):
        raise GridError(f"values have last dimension {v.shape[-1:]}, grid has {grid.size} points")
    out = v @ grid.weights
    return float(out) if np.ndim(out) == 0 else out


def ecdf(column, x: float) -> Tuple[float, float, float]:
    """Empirical cdf statistics of a univariate sample at the point ``x``.

    Returns
    -------
    (f_le, f_lt, f_ge) : tuple of float
        Fractions of entries <= x, < x, and >= x.  ``f_le + f_ge`` exceeds 1
        by exactly the tie mass at ``x``, and ``f_lt + f_ge == 1`` always.
    """
    col = as_vector(column, "column")
    n = col.size
    le = int(np.count_nonzero(col <= x))
    lt = int(np.count_nonzero(col < x))
    return le / n, lt / n, (n - lt) / n


@dataclass(frozen=True)
class FunctionalSample:
    """An (n, d) matrix of curves observed on a shared grid.

    Values are stored read-only; operations never mutate a sample.  Optional
    string labels attach one group tag per row.
    """

    grid: Grid
    values: np.ndarray
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if not isinstance(self.grid, Grid):
            raise GridError("sample grid must be a Grid instance")
        vals = np.asarray(self.values, dtype=float)
        if vals.ndim != 2:
            raise DataFormatError(f"sample values must be 2-d, got shape {vals.shape}")
        if vals.shape[0] < 1:
            raise DataFormatError("sample must contain at least one curve")
        if vals.shape[1] != self.grid.size:
            raise GridError(
                f"sample has {vals.shape[1]} columns but the grid has {self.grid.size} points"
            )
        if not np.isfinite(vals).all():
            raise DataFormatError("sample values contain non-finite entries")
        object.__setattr__(self, "values", _frozen(vals))
        if self.labels is not None:
            labels = tuple(str(v) for v in self.labels)
            if len(labels) != vals.shape[0]:
                raise DataFormatError(
                    f"{len(labels)} labels for {vals.shape[0]} curves"
                )
            object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def d(self) -> int:
        return self.values.shape[1]

    def row(self, i: int) -> np.ndarray:
        return self.values[i]

    def drop_row(self, i: int) -> "FunctionalSample":
        """The sample with row ``i`` removed (labels follow along)."""
        if self.n < 2:
            raise ParameterError("cannot drop a row from a single-curve sample")
        keep = np.delete(self.values, i, axis=0)
        labels = None
        if self.labels is not None:
            labels = self.labels[:i] + self.labels[i + 1:]
        return FunctionalSample(self.grid, keep, labels)

    def with_values(self, values) -> "FunctionalSample":
        return FunctionalSample(self.grid, values, self.labels)


_RANGE_TOL = 1e-12


@dataclass(frozen=True)
class DepthResult:
    """Depth values for a set of curves, tagged with the depth kind.

    ``range_hi`` is the theoretical (population) maximum of the kind, kept
    for reporting and plot scaling.  Finite-sample estimates of the
    coordinatewise kinds can exceed it slightly when ties inflate counts, so
    validation uses ``check_hi``, the largest value the estimator can emit;
    it defaults to ``range_hi``.
    """

    kind: str
    values: np.ndarray
    range_hi: float
    meta: dict = field(default_factory=dict)
    check_hi: Optional[float] = None

    def __post_init__(self):
        vals = as_vector(self.values, "depth values")
        hi = self.range_hi if self.check_hi is None else self.check_hi
        if not np.isfinite(hi) or hi <= 0:
            raise ParameterError(f"depth range bound must be positive, got {hi!r}")
        if vals.min() < -_RANGE_TOL or vals.max() > hi + _RANGE_TOL:
            raise ParameterError(
                f"{self.kind} depth values outside [0, {hi}]: "
                f"min={vals.min()!r} max={vals.max()!r}"
            )
        object.__setattr__(self, "values", _frozen(vals))
        object.__setattr__(self, "check_hi", float(hi))

    @property
    def n(self) -> int:
        return self.values.size
