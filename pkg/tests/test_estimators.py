"""scikit-learn compatibility of the depth estimators."""

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

from fundepth import (
    DEPTH_KINDS,
    ESTIMATORS,
    ModifiedBandDepth,
    SpatialDepth,
    depth_profile,
    depth_values,
    gen_gaussian_paths,
    ProcessSpec,
)
from conftest import interior_grid


@pytest.fixture(scope="module")
def curves():
    return gen_gaussian_paths(ProcessSpec.bm(interior_grid(15)), 12, seed=6).values


def test_registry_covers_every_kind():
    assert set(ESTIMATORS) == set(DEPTH_KINDS)
    for kind, cls in ESTIMATORS.items():
        assert cls._kind == kind


def test_get_set_params_and_clone():
    est = ModifiedBandDepth(J=3)
    params = est.get_params()
    assert params["J"] == 3 and params["leave_one_out"] is True
    est.set_params(J=4, threads=2)
    assert est.J == 4 and est.threads == 2
    dup = clone(est)
    assert dup.get_params() == est.get_params()


def test_fit_stores_reference(curves):
    est = SpatialDepth().fit(curves)
    assert est.n_features_in_ == curves.shape[1]
    assert est.sample_.n == curves.shape[0]


def test_not_fitted_error(curves):
    with pytest.raises(NotFittedError):
        SpatialDepth().score_samples(curves)


def test_score_samples_matches_functional_api(curves):
    est = ModifiedBandDepth(J=2).fit(curves)
    got = est.score_samples(curves[:5] + 0.2)
    want = depth_values(curves[:5] + 0.2, est.sample_, "mbd", J=2)
    assert np.array_equal(got, want)


def test_transform_shape(curves):
    est = SpatialDepth().fit(curves)
    out = est.transform(curves[:4])
    assert out.shape == (4, 1)


def test_fit_transform_is_leave_one_out(curves):
    est = ModifiedBandDepth()
    out = est.fit_transform(curves)
    sample = est.sample_
    want = depth_profile(sample, "mbd", leave_one_out=True).values
    assert np.array_equal(out.ravel(), want)
    # and differs from scoring against the full fitted sample
    assert not np.array_equal(out, est.transform(curves))


def test_fit_transform_include_self(curves):
    est = ModifiedBandDepth(leave_one_out=False)
    out = est.fit_transform(curves)
    assert np.array_equal(out, est.transform(curves))


def test_every_estimator_runs(curves):
    for kind, cls in ESTIMATORS.items():
        kwargs = {"n_directions": 40} if "n_directions" in cls().get_params() else {}
        est = cls(**kwargs)
        out = est.fit_transform(curves)
        assert out.shape == (curves.shape[0], 1), kind
        assert np.isfinite(out).all(), kind


def test_pipeline_composition(curves):
    pipe = make_pipeline(ModifiedBandDepth(), StandardScaler())
    out = pipe.fit_transform(curves)
    assert out.shape == (curves.shape[0], 1)
    assert abs(out.mean()) < 1e-12


def test_grid_parameter_changes_weighting(curves):
    # front-loaded grid reweights the spatial geometry
    points = np.concatenate([np.linspace(0.0, 0.1, 8), np.linspace(0.3, 1.0, 7)])
    uniform = SpatialDepth().fit_transform(curves)
    skewed = SpatialDepth(grid=points).fit_transform(curves)
    assert not np.array_equal(uniform, skewed)


def test_feature_names_out(curves):
    est = ModifiedBandDepth().fit(curves)
    assert list(est.get_feature_names_out()) == ["mbd_depth"]
