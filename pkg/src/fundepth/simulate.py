"""Seeded generators for the stochastic processes used in depth studies.

Gaussian path processes (Brownian motion, fractional Brownian motion, and
their bridges) are sampled exactly through a Cholesky factor of the grid
covariance; a geometric Brownian motion is the exponential of a drifted
Brownian path, and the high-dimensional Gaussian sequence model draws
correlated coordinates with polynomially shrinking scales.  Monotone links
transform a sample pointwise without touching ranks, and every process
exposes its exact pointwise quantile curves for closed-form checks.

All generators are deterministic functions of (spec, n, seed).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.stats import norm

from .errors import NumericalError, ParameterError
from .grid import FunctionalSample, Grid
from .validation import positive_int, probability

PATH_KINDS = ("bm", "fbm", "bridge", "fbb", "gbm")
PROCESS_KINDS = PATH_KINDS + ("gauss_seq", "linked")

_JITTERS = (0.0, 1e-12, 1e-11, 1e-10, 1e-9, 1e-8)


@dataclass(frozen=True)
class Link:
    """A pointwise transform y -> g(t, y), strictly increasing in y.

    The built-in constructors (`identity_link`, `exp_link`, `affine_link`)
    guarantee monotonicity; a custom transform must preserve it for the
    rank-invariance properties of the coordinatewise depths to carry over.
    """

    name: str
    transform: Callable[[np.ndarray, np.ndarray], np.ndarray]

    def __call__(self, points: np.ndarray, values: np.ndarray) -> np.ndarray:
        return self.transform(np.asarray(points, dtype=float), np.asarray(values, dtype=float))


def identity_link() -> Link:
    return Link("identity", lambda t, y: np.array(y, dtype=float))


def exp_link() -> Link:
    return Link("exp", lambda t, y: np.exp(y))


def affine_link(intercept, slope) -> Link:
    """g(t, y) = a(t) + b(t) y with b(t) > 0 everywhere on the grid.

    ``intercept`` and ``slope`` may be scalars or callables of the grid
    points.  A nonpositive slope at any grid point raises ParameterError
    when the link is applied.
    """

    def transform(t, y):
        a = np.broadcast_to(np.asarray(intercept(t) if callable(intercept) else intercept, dtype=float), t.shape)
        b = np.broadcast_to(np.asarray(slope(t) if callable(slope) else slope, dtype=float), t.shape)
        if not np.all(b > 0):
            raise ParameterError("affine link slope must be strictly positive on the grid")
        return a[None, :] + b[None, :] * y

    return Link("affine", transform)


@dataclass(frozen=True)
class ProcessSpec:
    """A process kind with its parameters, start value, and evaluation grid.

    Use the classmethod constructors; they validate the parameter set for
    each kind.  Path processes live on grids inside [0, 1]; the Gaussian
    sequence model uses the coordinate grid 1..d.
    """

    kind: str
    grid: Grid
    y0: float = 0.0
    hurst: Optional[float] = None
    rate: Optional[float] = None
    sigma: Optional[float] = None
    rho: Optional[float] = None
    b0: Optional[float] = None
    base: Optional["ProcessSpec"] = None
    link: Optional[Link] = None

    def __post_init__(self):
        if self.kind not in PROCESS_KINDS:
            raise ParameterError(f"unknown process kind {self.kind!r}; choose from {PROCESS_KINDS}")
        if self.kind == "linked":
            if self.base is None or self.link is None:
                raise ParameterError("a linked process needs a base spec and a link")
            return
        if not isinstance(self.grid, Grid):
            raise ParameterError("spec.grid must be a Grid instance")
        if not np.isfinite(self.y0):
            raise ParameterError("y0 must be finite")
        if self.kind in PATH_KINDS:
            pts = self.grid.points
            if pts[0] < 0 or pts[-1] > 1:
                raise ParameterError("path-process grids must lie within [0, 1]")
        if self.kind in ("fbm", "fbb"):
            if self.hurst is None or not 0.0 < self.hurst < 1.0:
                raise ParameterError(f"Hurst index must lie in (0, 1), got {self.hurst!r}")
        if self.kind == "gbm":
            if self.rate is None or not np.isfinite(self.rate):
                raise ParameterError("gbm needs a finite rate")
            if self.sigma is None or not self.sigma > 0:
                raise ParameterError(f"gbm volatility must be positive, got {self.sigma!r}")
        if self.kind == "gauss_seq":
            if self.rho is None or not 0.0 < self.rho < 1.0:
                raise ParameterError(f"sequence correlation must lie in (0, 1), got {self.rho!r}")

    @classmethod
    def bm(cls, grid: Grid, y0: float = 0.0) -> "ProcessSpec":
        return cls(kind="bm", grid=grid, y0=y0, hurst=0.5)

    @classmethod
    def fbm(cls, grid: Grid, hurst: float, y0: float = 0.0) -> "ProcessSpec":
        return cls(kind="fbm", grid=grid, y0=y0, hurst=hurst)

    @classmethod
    def bridge(cls, grid: Grid, y0: float = 0.0, b0: float = 0.0) -> "ProcessSpec":
        """Brownian bridge from y0 at t=0, tied down to b0 at t=1."""
        return cls(kind="bridge", grid=grid, y0=y0, hurst=0.5, b0=b0)

    @classmethod
    def fbb(cls, grid: Grid, hurst: float, y0: float = 0.0, b0: float = 0.0) -> "ProcessSpec":
        """Fractional Brownian bridge tied down to b0 at t=1."""
        return cls(kind="fbb", grid=grid, y0=y0, hurst=hurst, b0=b0)

    @classmethod
    def gbm(cls, grid: Grid, rate: float, sigma: float) -> "ProcessSpec":
        """Geometric Brownian motion exp((rate - sigma**2/2) t + sigma B_t), X_0 = 1."""
        return cls(kind="gbm", grid=grid, y0=1.0, rate=rate, sigma=sigma)

    @classmethod
    def gauss_seq(cls, d: int, rho: float = 0.1) -> "ProcessSpec":
        """Gaussian sequence with Cov(X_k, X_l) = rho**|k-l| / (k l)**2."""
        return cls(kind="gauss_seq", grid=Grid.sequence(positive_int(d, "d")), rho=rho)

    @classmethod
    def linked(cls, base: "ProcessSpec", link: Link) -> "ProcessSpec":
        return cls(kind="linked", grid=base.grid, base=base, link=link)


def fbm_covariance(times, hurst: float) -> np.ndarray:
    """Fractional Brownian covariance (t**2H + s**2H - |t-s|**2H) / 2.

    At hurst = 1/2 this reduces to min(s, t), the Brownian motion kernel.
    """
    t = np.asarray(times, dtype=float)
    h2 = 2.0 * hurst
    return 0.5 * (t[:, None] ** h2 + t[None, :] ** h2 - np.abs(t[:, None] - t[None, :]) ** h2)


def sequence_covariance(d: int, rho: float) -> np.ndarray:
    """Covariance rho**|k-l| / (k l)**2 on coordinates k, l = 1..d.

    An autoregressive correlation profile scaled by 1/k**2 per coordinate,
    so Var(X_k) = 1/k**4.  Positive definite for 0 < rho < 1 because the
    scaling is a congruence of the AR(1) correlation matrix.
    """
    k = np.arange(1, d + 1, dtype=float)
    inv_sq = 1.0 / (k * k)
    return rho ** np.abs(k[:, None] - k[None, :]) * inv_sq[:, None] * inv_sq[None, :]


def _cholesky(cov: np.ndarray) -> np.ndarray:
    """Lower Cholesky factor with escalating diagonal jitter on failure."""
    if not np.allclose(cov, cov.T, rtol=0.0, atol=0.0):
        cov = 0.5 * (cov + cov.T)
    scale = float(np.max(np.diag(cov))) if cov.size else 0.0
    last = None
    for jitter in _JITTERS:
        shifted = cov if jitter == 0.0 else cov + (jitter * scale) * np.eye(cov.shape[0])
        try:
            return np.linalg.cholesky(shifted)
        except np.linalg.LinAlgError as exc:
            last = exc
    raise NumericalError(
        f"covariance is not positive semi-definite within jitter {_JITTERS[-1]:g}: {last}"
    )


def process_covariance(spec: ProcessSpec) -> np.ndarray:
    """Covariance matrix of the centered Gaussian process on its grid."""
    ts = spec.grid.points
    if spec.kind in ("bm", "fbm"):
        return fbm_covariance(ts, spec.hurst)
    if spec.kind in ("bridge", "fbb"):
        c = _bridge_coeff(ts, spec.hurst)
        return fbm_covariance(ts, spec.hurst) - c[:, None] * c[None, :]
    if spec.kind == "gauss_seq":
        return sequence_covariance(spec.grid.size, spec.rho)
    raise ParameterError(f"{spec.kind!r} is not a Gaussian process; use generate()")


def _bridge_coeff(ts: np.ndarray, hurst: float) -> np.ndarray:
    """Cov(W_t, W_1) for centered fractional Brownian motion, Var(W_1) = 1."""
    h2 = 2.0 * hurst
    return 0.5 * (ts ** h2 + 1.0 - (1.0 - ts) ** h2)


def _gaussian_matrix(cov: np.ndarray, n: int, seed: int) -> np.ndarray:
    left = _cholesky(cov)
    z = np.random.default_rng(seed).standard_normal((n, cov.shape[0]))
    return z @ left.T


def _centered_fbm(ts: np.ndarray, hurst: float, n: int, seed: int) -> np.ndarray:
    """Centered fBm rows on ts, with zero-variance points pinned exactly."""
    variances = ts ** (2.0 * hurst)
    live = variances > 0
    paths = np.zeros((n, ts.size))
    if live.any():
        cov = fbm_covariance(ts[live], hurst)
        paths[:, live] = _gaussian_matrix(cov, n, seed)
    return paths


def gen_gaussian_paths(spec: ProcessSpec, n: int, seed: int = 0) -> FunctionalSample:
    """Exact draws of a Gaussian process spec via the grid covariance.

    Zero-variance grid points (t = 0 for the path processes, t = 1 for the
    bridges) are pinned to their deterministic values exactly instead of
    being pushed through the factorisation.

    Raises
    ------
    ParameterError
        When the spec is not one of the Gaussian kinds.
    NumericalError
        When the covariance cannot be factored even with jitter.
    """
    n = positive_int(n, "n")
    if spec.kind == "gauss_seq":
        return gen_gauss_seq(spec.rho, spec.grid.size, n, seed)
    if spec.kind not in ("bm", "fbm", "bridge", "fbb"):
        raise ParameterError(f"{spec.kind!r} is not a Gaussian process; use generate()")
    ts = spec.grid.points
    hurst = spec.hurst
    if spec.kind in ("bm", "fbm"):
        values = spec.y0 + _centered_fbm(ts, hurst, n, seed)
        return FunctionalSample(spec.grid, values)

    # bridge / fbb: tie an fBm down at t = 1.  If the grid does not include
    # the endpoint, generate with it appended and drop it afterwards.
    has_end = ts.size > 0 and ts[-1] == 1.0
    gen_ts = ts if has_end else np.append(ts, 1.0)
    w = _centered_fbm(gen_ts, hurst, n, seed)
    c = _bridge_coeff(gen_ts, hurst)
    tied = w - c[None, :] * w[:, -1][:, None]
    values = spec.y0 + tied + c[None, :] * (spec.b0 - spec.y0)
    if not has_end:
        values = values[:, :-1]
    return FunctionalSample(spec.grid, np.ascontiguousarray(values))


def gen_gbm(rate: float, sigma: float, grid: Grid, n: int, seed: int = 0) -> FunctionalSample:
    """Geometric Brownian motion: exp((rate - sigma**2/2) t + sigma B_t).

    Built from a fresh Brownian sample with the same seed, so a matched
    drift-and-exponential pipeline reproduces it exactly.  X_0 = 1 exactly
    when the grid includes t = 0.
    """
    spec = ProcessSpec.gbm(grid, rate, sigma)
    bm = gen_gaussian_paths(ProcessSpec.bm(grid), n, seed)
    drift = (rate - 0.5 * sigma ** 2) * grid.points
    values = np.exp(drift[None, :] + sigma * bm.values)
    return FunctionalSample(spec.grid, values)


def gen_gauss_seq(rho: float, d: int, n: int, seed: int = 0) -> FunctionalSample:
    """Draws from the Gaussian sequence model on coordinates 1..d."""
    spec = ProcessSpec.gauss_seq(d, rho)
    n = positive_int(n, "n")
    values = _gaussian_matrix(sequence_covariance(d, rho), n, seed)
    return FunctionalSample(spec.grid, values)


def apply_link(sample: FunctionalSample, link: Link) -> FunctionalSample:
    """Transform a sample pointwise by a monotone link, keeping its grid."""
    values = link(sample.grid.points, sample.values)
    values = np.asarray(values, dtype=float)
    if values.shape != sample.values.shape:
        raise ParameterError(
            f"link changed the sample shape from {sample.values.shape} to {values.shape}"
        )
    if not np.isfinite(values).all():
        raise ParameterError("link produced non-finite values")
    return FunctionalSample(sample.grid, values, sample.labels)


def generate(spec: ProcessSpec, n: int, seed: int = 0) -> FunctionalSample:
    """Draw ``n`` rows from any process spec (the one generator entry point)."""
    if spec.kind == "gbm":
        return gen_gbm(spec.rate, spec.sigma, spec.grid, n, seed)
    if spec.kind == "linked":
        return apply_link(generate(spec.base, n, seed), spec.link)
    return gen_gaussian_paths(spec, n, seed)


def quantile_curve(spec: ProcessSpec, p: float) -> np.ndarray:
    """Exact pointwise p-quantile curve of the process on its grid.

    For the Gaussian kinds this is mean(t) + sd(t) * z_p; the geometric and
    linked kinds push the base quantile through their strictly increasing
    transform, under which pointwise quantiles commute.
    """
    p = probability(p)
    z = float(norm.ppf(p))
    ts = spec.grid.points
    if spec.kind in ("bm", "fbm"):
        return spec.y0 + ts ** spec.hurst * z
    if spec.kind in ("bridge", "fbb"):
        c = _bridge_coeff(ts, spec.hurst)
        variances = np.maximum(ts ** (2.0 * spec.hurst) - c * c, 0.0)
        return spec.y0 + c * (spec.b0 - spec.y0) + np.sqrt(variances) * z
    if spec.kind == "gbm":
        return np.exp((spec.rate - 0.5 * spec.sigma ** 2) * ts + spec.sigma * np.sqrt(ts) * z)
    if spec.kind == "gauss_seq":
        return z / (ts * ts)
    if spec.kind == "linked":
        base_q = quantile_curve(spec.base, p)
        return np.asarray(spec.link(ts, base_q[None, :]), dtype=float)[0]
    raise ParameterError(f"unknown process kind {spec.kind!r}")
