"""Projection-based depths and exact-degeneracy detection.

When the data sit in many more dimensions than there are observations, any
point outside the affine span of the sample has halfspace and projection
depth exactly zero: a direction orthogonal to the span separates it from
every observation.  The functions here detect that case deterministically
through the residual of the evaluated point against the span of the centered
sample, and fall back to Monte Carlo directions only for the in-span part.

Projections use the plain (unweighted) dot product; directions are unit
vectors in coordinate space.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSampleError, ParameterError
from .grid import FunctionalSample
from .integrated import UNIVARIATE_KINDS, _univariate_from_counts
from .validation import as_curve, as_vector, positive_float, positive_int

DEFAULT_TOL = 1e-8
DEFAULT_DIRECTIONS = 1000


def sample_scale(sample: FunctionalSample) -> float:
    """Median absolute entry of the centered sample; 1.0 when that is zero.

    Used to turn the relative tolerance of the span test into an absolute
    threshold on the residual norm.
    """
    centered = sample.values - sample.values.mean(axis=0, keepdims=True)
    scale = float(np.median(np.abs(centered)))
    return scale if scale > 0 else 1.0


@dataclass(frozen=True)
class SpanDecomposition:
    """Orthonormal basis of the centered sample's row space.

    ``basis`` has shape (rank, d); singular directions with singular value
    at most ``tol`` times the largest are treated as numerically null.
    """

    basis: np.ndarray
    mean: np.ndarray
    rank: int
    tol: float

    @classmethod
    def from_sample(cls, sample: FunctionalSample, tol: float = DEFAULT_TOL) -> "SpanDecomposition":
        tol = positive_float(tol, "tol")
        mean = sample.values.mean(axis=0)
        centered = sample.values - mean[None, :]
        _, s, vt = np.linalg.svd(centered, full_matrices=False)
        if s.size and s[0] > 0:
            rank = int(np.count_nonzero(s > tol * s[0]))
        else:
            rank = 0
        return cls(vt[:rank], mean, rank, tol)

    def residual(self, x) -> float:
        """Norm of the component of ``x - mean`` orthogonal to the span."""
        y = np.asarray(x, dtype=float) - self.mean
        if self.rank:
            y = y - self.basis.T @ (self.basis @ y)
        return float(np.sqrt(y @ y))


def span_residual(x, sample: FunctionalSample, tol: float = DEFAULT_TOL) -> float:
    """Distance from ``x`` to the affine span of the sample curves."""
    x = as_curve(x, sample.d)
    return SpanDecomposition.from_sample(sample, tol).residual(x)


@dataclass(frozen=True)
class DirectionSet:
    """Unit projection directions with the seed and scheme that built them."""

    vectors: np.ndarray
    seed: int
    scheme: str

    def __post_init__(self):
        vecs = np.asarray(self.vectors, dtype=float)
        if vecs.ndim != 2 or vecs.shape[0] < 1:
            raise ParameterError("direction set must be a non-empty (N, d) array")
        norms = np.sqrt((vecs * vecs).sum(axis=1))
        if not np.allclose(norms, 1.0, atol=1e-9):
            raise ParameterError("directions must have unit norm")
        object.__setattr__(self, "vectors", vecs)

    @property
    def n_directions(self) -> int:
        return self.vectors.shape[0]

    @classmethod
    def gaussian(cls, n_directions: int, dim: int, seed: int = 0) -> "DirectionSet":
        """Independent standard normal directions, normalised to unit length."""
        n_directions = positive_int(n_directions, "n_directions")
        dim = positive_int(dim, "dim")
        rng = np.random.default_rng(seed)
        vecs = rng.standard_normal((n_directions, dim))
        norms = np.sqrt((vecs * vecs).sum(axis=1, keepdims=True))
        return cls(vecs / norms, seed, "gaussian-iid")

    @classmethod
    def in_span(
        cls,
        n_directions: int,
        sample: FunctionalSample,
        seed: int = 0,
        tol: float = DEFAULT_TOL,
    ) -> "DirectionSet":
        """Gaussian directions restricted to the span of the centered sample.

        In a d >> n regime unrestricted random directions are almost
        orthogonal to the data and carry no signal; restricting them to the
        sample's span makes every direction informative.
        """
        n_directions = positive_int(n_directions, "n_directions")
        dec = SpanDecomposition.from_sample(sample, tol)
        if dec.rank == 0:
            raise DegenerateSampleError("sample has zero spread; no span to draw directions from")
        rng = np.random.default_rng(seed)
        coefs = rng.standard_normal((n_directions, dec.rank))
        vecs = coefs @ dec.basis
        norms = np.sqrt((vecs * vecs).sum(axis=1, keepdims=True))
        return cls(vecs / norms, seed, "span-restricted")


def _projections(x, sample, directions):
    if directions.vectors.shape[1] != sample.d:
        raise ParameterError(
            f"directions have dimension {directions.vectors.shape[1]}, sample has {sample.d}"
        )
    return directions.vectors @ x, directions.vectors @ sample.values.T


def random_tukey_depth(x, sample: FunctionalSample, directions: DirectionSet) -> float:
    """Smallest one-sided projection fraction over the direction set.

    For each direction u: min(#{u.X <= u.x}, #{u.X >= u.x}) / n, minimised
    over directions.  Purely Monte Carlo; see `halfspace_depth` for the
    variant with deterministic out-of-span detection.
    """
    x = as_curve(x, sample.d)
    px, proj = _projections(x, sample, directions)
    le = (proj <= px[:, None]).sum(axis=1)
    ge = (proj >= px[:, None]).sum(axis=1)
    return float(np.minimum(le, ge).min() / sample.n)


def halfspace_depth(
    x,
    sample: FunctionalSample,
    directions: DirectionSet | None = None,
    tol: float = DEFAULT_TOL,
) -> float:
    """Random-direction halfspace depth with exact zero off the sample span.

    If the residual of ``x`` against the span of the centered sample
    exceeds ``tol * sample_scale(sample)``, some direction separates ``x``
    from every observation and the depth is returned as exactly 0.0 without
    touching the direction set.  Otherwise the minimum one-sided projection
    fraction over ``directions`` is returned, which requires a non-empty
    direction set.
    """
    x = as_curve(x, sample.d)
    tol = positive_float(tol, "tol")
    if span_residual(x, sample, tol) > tol * sample_scale(sample):
        return 0.0
    if directions is None:
        raise ParameterError("x lies in the sample span; a direction set is required")
    return random_tukey_depth(x, sample, directions)


def projection_depth(
    x,
    sample: FunctionalSample,
    directions: DirectionSet | None = None,
    tol: float = DEFAULT_TOL,
) -> float:
    """Reciprocal of 1 plus the largest standardised projection deviation.

    Over the direction set, the deviation |u.x - mean(u.X)| / sd(u.X) is
    maximised (population standard deviation; directions along which the
    projected sample has sd below ``tol * sample_scale`` are skipped).  Off
    the sample span the value is exactly 0.0, mirroring `halfspace_depth`.
    """
    x = as_curve(x, sample.d)
    tol = positive_float(tol, "tol")
    if span_residual(x, sample, tol) > tol * sample_scale(sample):
        return 0.0
    if directions is None:
        raise ParameterError("x lies in the sample span; a direction set is required")
    px, proj = _projections(x, sample, directions)
    mu = proj.mean(axis=1)
    sd = proj.std(axis=1)
    keep = sd > tol * sample_scale(sample)
    if not keep.any():
        raise DegenerateSampleError("projected sample is constant along every direction")
    dev = np.abs(px[keep] - mu[keep]) / sd[keep]
    return float(1.0 / (1.0 + dev.max()))


def integrated_dual_depth(
    x,
    sample: FunctionalSample,
    directions: DirectionSet,
    kind: str = "halfspace",
) -> float:
    """Mean univariate depth of the projections over a direction set.

    Averages (rather than minimises) ``univariate_depth(kind, u.x, u.X)``
    over directions, so a point can be shallow in a few directions without
    the whole value collapsing.  Stays strictly positive in d > n regimes
    where the minimum-based depths vanish.
    """
    if kind not in UNIVARIATE_KINDS:
        raise ParameterError(f"unknown univariate depth kind {kind!r}; choose from {UNIVARIATE_KINDS}")
    x = as_curve(x, sample.d)
    px, proj = _projections(x, sample, directions)
    le = (proj <= px[:, None]).sum(axis=1)
    lt = (proj < px[:, None]).sum(axis=1)
    vals = _univariate_from_counts(kind, le, lt, sample.n)
    return float(vals.mean())


def halfspace_depth_bound(standardized) -> np.ndarray:
    """Running upper bound on halfspace depth from standardised coordinates.

    Given coordinates y_k of a point, each divided by the per-coordinate
    scale of the data, returns b_d = 1 / sum_{k <= d} y_k**2 for every
    prefix length d.  The bound is nonincreasing in d; for coordinates that
    behave like standardised independent draws it decays like 1/d, which is
    the diagnostic signature of depth collapsing in high dimensions.
    Prefixes with zero sum give +inf.
    """
    y = as_vector(standardized, "standardized")
    csum = np.cumsum(y * y)
    out = np.full(y.size, np.inf)
    pos = csum > 0
    out[pos] = 1.0 / csum[pos]
    return out
