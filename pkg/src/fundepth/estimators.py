"""Estimator-style wrappers around the depth profiles.

Each class follows the scikit-learn contract: constructor stores
hyperparameters untouched, `fit` captures the reference sample, and
`score_samples` / `transform` score new curves against it.  `transform`
returns an (m, 1) column so the estimators compose inside pipelines.

`fit_transform` is special-cased: with ``leave_one_out=True`` (the
default) it returns the leave-one-out depth profile of the training
sample, where each curve is scored against the other n - 1.  That is the
honest in-sample depth (a curve never certifies its own centrality), so
like cross-fitted target encoders, ``fit_transform(X)`` differs from
``fit(X).transform(X)`` by design.
"""

from __future__ import annotations

from typing import Optional

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .grid import FunctionalSample, Grid
from .profiles import depth_profile, depth_values
from .projection import DEFAULT_DIRECTIONS, DEFAULT_TOL
from .validation import as_matrix


class _DepthBase(TransformerMixin, BaseEstimator):
    """Shared fit/score plumbing; subclasses set `_kind` and parameters."""

    _kind = ""

    def __init__(self, grid=None, leave_one_out=True, threads=None):
        self.grid = grid
        self.leave_one_out = leave_one_out
        self.threads = threads

    def _depth_params(self) -> dict:
        return {}

    def _build_sample(self, X) -> FunctionalSample:
        values = as_matrix(X, "X")
        if self.grid is None:
            grid = Grid.sequence(values.shape[1])
        else:
            grid = Grid(np.asarray(self.grid, dtype=float))
        return FunctionalSample(grid, values)

    def fit(self, X, y=None):
        """Store the reference sample that later curves are scored against."""
        self.sample_ = self._build_sample(X)
        self.n_features_in_ = self.sample_.d
        return self

    def score_samples(self, X) -> np.ndarray:
        """Depth of each row of X with respect to the fitted sample."""
        check_is_fitted(self, "sample_")
        rows = as_matrix(X, "X")
        return depth_values(
            rows, self.sample_, self._kind, threads=self.threads, **self._depth_params()
        )

    def transform(self, X) -> np.ndarray:
        return self.score_samples(X).reshape(-1, 1)

    def fit_transform(self, X, y=None) -> np.ndarray:
        self.fit(X)
        if not self.leave_one_out:
            return self.transform(X)
        result = depth_profile(
            self.sample_,
            self._kind,
            leave_one_out=True,
            threads=self.threads,
            **self._depth_params(),
        )
        return result.values.reshape(-1, 1)

    def get_feature_names_out(self, input_features=None):
        return np.asarray([f"{self._kind}_depth"], dtype=object)


class BandDepth(_DepthBase):
    """Fraction of J-subsets of the sample whose envelope contains the curve."""

    _kind = "bd"

    def __init__(self, J=2, grid=None, leave_one_out=True, threads=None):
        super().__init__(grid=grid, leave_one_out=leave_one_out, threads=threads)
        self.J = J

    def _depth_params(self):
        return {"J": self.J}


class ModifiedBandDepth(_DepthBase):
    """Expected proportion of the grid where the curve sits inside the envelope."""

    _kind = "mbd"

    def __init__(self, J=2, grid=None, leave_one_out=True, threads=None):
        super().__init__(grid=grid, leave_one_out=leave_one_out, threads=threads)
        self.J = J

    def _depth_params(self):
        return {"J": self.J}


class HalfRegionDepth(_DepthBase):
    """Minimum of the all-above and all-below sample fractions."""

    _kind = "hrd"


class ModifiedHalfRegionDepth(_DepthBase):
    """Half-region depth with 'entirely' relaxed to time proportion."""

    _kind = "mhrd"


class IntegratedDepth(_DepthBase):
    """Grid-weighted average of a univariate depth applied per coordinate."""

    _kind = "id"

    def __init__(self, univariate="spatial", grid=None, leave_one_out=True, threads=None):
        super().__init__(grid=grid, leave_one_out=leave_one_out, threads=threads)
        self.univariate = univariate

    def _depth_params(self):
        return {"univariate": self.univariate}


class HDepth(_DepthBase):
    """Kernel-smoothed average distance; bandwidth defaults to the sample's
    median pairwise distance."""

    _kind = "hdepth"

    def __init__(self, bandwidth=None, grid=None, leave_one_out=True, threads=None):
        super().__init__(grid=grid, leave_one_out=leave_one_out, threads=threads)
        self.bandwidth = bandwidth

    def _depth_params(self):
        return {"bandwidth": self.bandwidth}


class SpatialDepth(_DepthBase):
    """One minus the norm of the average unit vector toward the sample."""

    _kind = "sd"

    def __init__(self, inner_product="functional-L2", grid=None, leave_one_out=True, threads=None):
        super().__init__(grid=grid, leave_one_out=leave_one_out, threads=threads)
        self.inner_product = inner_product

    def _depth_params(self):
        return {"inner_product": self.inner_product}


class _DirectionalBase(_DepthBase):
    def __init__(self, n_directions=DEFAULT_DIRECTIONS, seed=0, grid=None,
                 leave_one_out=True, threads=None):
        super().__init__(grid=grid, leave_one_out=leave_one_out, threads=threads)
        self.n_directions = n_directions
        self.seed = seed

    def _depth_params(self):
        return {"n_directions": self.n_directions, "seed": self.seed}


class HalfspaceDepth(_DirectionalBase):
    """Directional minimum of one-sided sample fractions, exactly zero for
    curves outside the sample's linear span."""

    _kind = "hd"

    def __init__(self, n_directions=DEFAULT_DIRECTIONS, seed=0, tol=DEFAULT_TOL,
                 grid=None, leave_one_out=True, threads=None):
        super().__init__(n_directions=n_directions, seed=seed, grid=grid,
                         leave_one_out=leave_one_out, threads=threads)
        self.tol = tol

    def _depth_params(self):
        return dict(super()._depth_params(), tol=self.tol)


class ProjectionDepth(HalfspaceDepth):
    """Inverse worst-case standardized deviation over random directions."""

    _kind = "pd"


class RandomTukeyDepth(_DirectionalBase):
    """Halfspace depth restricted to finitely many random directions."""

    _kind = "rtd"


class IntegratedDualDepth(_DirectionalBase):
    """Average univariate depth of the curve's random projections."""

    _kind = "idd"

    def __init__(self, n_directions=DEFAULT_DIRECTIONS, univariate="halfspace", seed=0,
                 grid=None, leave_one_out=True, threads=None):
        super().__init__(n_directions=n_directions, seed=seed, grid=grid,
                         leave_one_out=leave_one_out, threads=threads)
        self.univariate = univariate

    def _depth_params(self):
        return dict(super()._depth_params(), univariate=self.univariate)


ESTIMATORS = {
    cls._kind: cls
    for cls in (
        BandDepth, ModifiedBandDepth, HalfRegionDepth, ModifiedHalfRegionDepth,
        IntegratedDepth, HDepth, SpatialDepth, HalfspaceDepth, ProjectionDepth,
        RandomTukeyDepth, IntegratedDualDepth,
    )
}
