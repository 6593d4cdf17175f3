import numpy as np
import pytest

from fundepth import FunctionalSample, Grid


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def make_sample(values, points=None) -> FunctionalSample:
    values = np.asarray(values, dtype=float)
    if values.ndim == 1:
        values = values[:, None]
    if points is None:
        grid = Grid.sequence(values.shape[1])
    else:
        grid = Grid(np.asarray(points, dtype=float))
    return FunctionalSample(grid, values)


def constant_curves(levels, d=4) -> FunctionalSample:
    """One constant curve per level, on the uniform sequence grid."""
    levels = np.asarray(levels, dtype=float)
    return make_sample(np.repeat(levels[:, None], d, axis=1))


def interior_grid(d: int) -> Grid:
    """d equispaced points strictly inside (0, 1)."""
    return Grid(np.arange(1, d + 1, dtype=float) / (d + 1))
