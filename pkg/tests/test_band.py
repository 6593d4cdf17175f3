"""Band and half-region depths against enumeration oracles and closed forms."""

import numpy as np
import pytest

from fundepth import (
    FunctionalSample,
    Grid,
    GridError,
    ParameterError,
    band_depth,
    band_depth_sup,
    half_region_depth,
    modified_band_depth,
    modified_band_depth_naive,
    modified_band_depth_quantile,
    modified_half_region_depth,
    modified_half_region_depth_quantile,
)
from conftest import constant_curves, make_sample


def test_bd_single_pair_contains():
    s = constant_curves([1.0, 3.0])
    assert band_depth(np.full(4, 2.0), s, J=2) == 1.0


def test_bd_three_constants_enumeration():
    # pairs (1,3) and (2,3) contain 2.5, pair (1,2) does not
    s = constant_curves([1.0, 2.0, 3.0])
    assert band_depth(np.full(4, 2.5), s, J=2) == pytest.approx(2 / 3, abs=1e-15)


def test_bd_outside_envelope_is_zero():
    s = constant_curves([1.0, 2.0, 3.0])
    assert band_depth(np.full(4, 5.0), s, J=2) == 0.0
    assert half_region_depth(np.full(4, 5.0), s) == 0.0


def test_hrd_examples():
    assert half_region_depth(np.full(4, 2.0), constant_curves([1.0, 3.0])) == 0.5
    assert half_region_depth(np.full(4, 3.0), constant_curves([1.0, 2.0])) == 0.0


def test_mbd_naive_three_constants():
    s = constant_curves([1.0, 2.0, 3.0])
    assert modified_band_depth_naive(np.full(4, 2.5), s, J=2) == pytest.approx(2 / 3, abs=1e-15)


def test_mbd_half_grid_band():
    # one pair; x inside the band on exactly half the uniform grid
    s = make_sample([[0.0, 0.0, 0.0, 0.0], [1.0, 1.0, 1.0, 1.0]])
    x = np.array([0.5, 0.5, 2.0, 2.0])
    assert modified_band_depth_naive(x, s, J=2) == pytest.approx(0.5, abs=1e-15)
    assert modified_band_depth(x, s, J=2) == pytest.approx(0.5, abs=1e-15)


def test_mbd_fast_count_formula_cases():
    s = constant_curves([1.0, 2.0, 3.0])
    assert modified_band_depth(np.full(4, 2.0), s, J=2) == 1.0
    assert modified_band_depth(np.full(4, 2.5), s, J=2) == pytest.approx(2 / 3, abs=1e-15)


def test_mbd_fast_matches_naive_on_random_instances():
    rng = np.random.default_rng(42)
    for _ in range(50):
        n = int(rng.integers(2, 11))
        d = int(rng.integers(1, 7))
        J = int(rng.integers(2, min(n, 3) + 1))
        values = rng.standard_normal((n, d))
        s = make_sample(values)
        x = rng.standard_normal(d)
        fast = modified_band_depth(x, s, J=J)
        naive = modified_band_depth_naive(x, s, J=J)
        assert abs(fast - naive) <= 1e-12


def test_mbd_of_median_is_maximal_among_rows():
    rng = np.random.default_rng(8)
    s = make_sample(rng.standard_normal((9, 5)))
    med = np.median(s.values, axis=0)
    d_med = modified_band_depth(med, s, J=2)
    for i in range(s.n):
        assert modified_band_depth(s.row(i), s, J=2) <= d_med + 1e-12


def test_mhrd_three_constants():
    s = constant_curves([1.0, 2.0, 3.0])
    assert modified_half_region_depth(np.full(4, 2.5), s) == pytest.approx(1 / 3, abs=1e-15)


def test_mhrd_below_everything_is_zero():
    s = constant_curves([1.0, 2.0, 3.0])
    assert modified_half_region_depth(np.full(4, 0.0), s) == 0.0


def test_mhrd_median_tie_mass():
    # odd n constants: the below side carries 1/2 + 1/(2n), so the min is >= 1/2
    s = constant_curves([1.0, 2.0, 3.0])
    value = modified_half_region_depth(np.full(4, 2.0), s)
    assert value == pytest.approx(0.5 + 1 / 6, abs=1e-15)
    assert value >= 0.5


def test_population_quantile_forms():
    assert modified_band_depth_quantile(0.5, J=2) == pytest.approx(band_depth_sup(2), abs=1e-15)
    assert modified_band_depth_quantile(0.3, J=2) == pytest.approx(0.42, abs=1e-15)
    assert modified_half_region_depth_quantile(0.3) == pytest.approx(0.3, abs=1e-15)
    assert band_depth_sup(2) == 0.5
    assert band_depth_sup(3) == 1.25


def test_quantile_forms_reject_bad_p():
    with pytest.raises(ParameterError):
        modified_band_depth_quantile(0.0)
    with pytest.raises(ParameterError):
        modified_half_region_depth_quantile(1.0)


def test_bd_at_most_mbd():
    rng = np.random.default_rng(17)
    for _ in range(20):
        s = make_sample(rng.standard_normal((7, 4)))
        x = rng.standard_normal(4)
        assert band_depth(x, s, J=3) <= modified_band_depth(x, s, J=3) + 1e-12


def test_translation_invariance_exact():
    rng = np.random.default_rng(23)
    values = rng.standard_normal((8, 5))
    shift = rng.standard_normal(5) * 10
    x = rng.standard_normal(5)
    s = make_sample(values)
    t = make_sample(values + shift)
    assert band_depth(x + shift, t, J=3) == band_depth(x, s, J=3)
    assert half_region_depth(x + shift, t) == half_region_depth(x, s)
    assert modified_band_depth(x + shift, t, J=3) == modified_band_depth(x, s, J=3)
    assert modified_half_region_depth(x + shift, t) == modified_half_region_depth(x, s)


def test_monotone_ordering_on_symmetric_constants():
    s = constant_curves([-2.0, -1.0, 0.0, 1.0, 2.0])
    inner = np.full(4, 0.5)
    outer = np.full(4, 1.5)
    assert modified_band_depth(outer, s) <= modified_band_depth(inner, s)
    assert modified_half_region_depth(outer, s) <= modified_half_region_depth(inner, s)


def test_parameter_errors():
    s = constant_curves([1.0, 2.0, 3.0])
    with pytest.raises(ParameterError):
        band_depth(np.zeros(4), s, J=4)
    with pytest.raises(ParameterError):
        modified_band_depth(np.zeros(4), s, J=1)
    with pytest.raises(GridError):
        band_depth(np.zeros(3), s, J=2)


def test_single_grid_point_betweenness():
    s = FunctionalSample(Grid.sequence(1), np.array([[1.0], [2.0], [4.0]]))
    assert band_depth(np.array([3.0]), s, J=2) == pytest.approx(2 / 3, abs=1e-15)
