"""One entry point for computing depth profiles across all kinds.

A profile scores every curve of a sample against the rest of the sample
(leave-one-out, the convention for outlyingness studies) or against the
full sample including itself.  `depth_values` scores arbitrary curves
against a fixed reference sample, which is what two-sample comparisons
and fitted estimators need.

Direction-based kinds build their direction set once per call from the
full sample, so all rows see the same projections.  The worker count for
the per-row fan-out honours the FUNDEPTH_THREADS environment variable;
results are collected in row order either way, keeping outputs identical.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np

from . import band, integrated, projection, spatial
from .errors import DegenerateSampleError, ParameterError
from .grid import DepthResult, FunctionalSample
from .validation import as_matrix, positive_int

DEPTH_KINDS = ("bd", "hrd", "mbd", "mhrd", "id", "hdepth", "sd", "hd", "pd", "rtd", "idd")

_NEEDS_DIRECTIONS = ("hd", "pd", "rtd", "idd")

# largest value the univariate kinds can emit once ties are involved
_UNIVARIATE_CHECK_HI = {"halfspace": 1.0, "simplicial": 2.0, "spatial": 1.0}
_UNIVARIATE_RANGE_HI = {"halfspace": 0.5, "simplicial": 0.5, "spatial": 1.0}


def _resolve_threads(threads: Optional[int]) -> int:
    if threads is None:
        raw = os.environ.get("FUNDEPTH_THREADS", "").strip()
        if not raw:
            return 1
        try:
            threads = int(raw)
        except ValueError:
            raise ParameterError(f"FUNDEPTH_THREADS must be an integer, got {raw!r}") from None
    return positive_int(threads, "threads")


class _Evaluator:
    """Per-kind closure: depth of one curve against a reference sample."""

    def __init__(self, sample: FunctionalSample, kind: str, opts: dict):
        self.kind = kind
        self.opts = opts
        self.meta = {"kind": kind}
        self.range_hi = 1.0
        self.check_hi: Optional[float] = None
        self._directions = None
        self._sample = sample

        J = opts["J"]
        if kind in ("bd", "mbd"):
            self.meta["J"] = J
            self.range_hi = band.band_depth_sup(J)
            self.check_hi = float(J - 1)
        elif kind in ("hrd", "mhrd"):
            self.range_hi = 0.5
            self.check_hi = 1.0
        elif kind in ("id", "idd"):
            uni = opts["univariate"] or ("spatial" if kind == "id" else "halfspace")
            if uni not in integrated.UNIVARIATE_KINDS:
                raise ParameterError(
                    f"unknown univariate depth kind {uni!r}; choose from {integrated.UNIVARIATE_KINDS}"
                )
            self.opts = dict(opts, univariate=uni)
            self.meta["univariate"] = uni
            self.range_hi = _UNIVARIATE_RANGE_HI[uni]
            self.check_hi = _UNIVARIATE_CHECK_HI[uni]
        elif kind == "hdepth":
            h = opts["bandwidth"]
            if h is None:
                h = integrated.median_pairwise_distance(sample)
                if h <= 0:
                    raise DegenerateSampleError(
                        "median pairwise distance is zero; pass an explicit bandwidth"
                    )
            self.opts = dict(opts, bandwidth=h)
            self.meta["bandwidth"] = h
            self.range_hi = 1.0 / h
        elif kind in ("hd", "rtd"):
            self.range_hi = 0.5
            self.check_hi = 1.0
        elif kind not in DEPTH_KINDS:
            raise ParameterError(f"unknown depth kind {kind!r}; choose from {DEPTH_KINDS}")

        if kind in _NEEDS_DIRECTIONS:
            self.meta["n_directions"] = opts["n_directions"]
            self.meta["seed"] = opts["seed"]
        if kind in ("hd", "pd"):
            self.meta["tol"] = opts["tol"]

    def directions(self) -> projection.DirectionSet:
        # built lazily: profiles that resolve entirely through the exact
        # out-of-span zero never need directions at all
        if self._directions is None:
            opts = self.opts
            if self.kind in ("hd", "pd"):
                self._directions = projection.DirectionSet.in_span(
                    opts["n_directions"], self._sample, opts["seed"], opts["tol"]
                )
            else:
                self._directions = projection.DirectionSet.gaussian(
                    opts["n_directions"], self._sample.d, opts["seed"]
                )
            self.meta["scheme"] = self._directions.scheme
        return self._directions

    def __call__(self, x: np.ndarray, ref: FunctionalSample) -> float:
        kind, opts = self.kind, self.opts
        if kind == "bd":
            return band.band_depth(x, ref, opts["J"])
        if kind == "hrd":
            return band.half_region_depth(x, ref)
        if kind == "mbd":
            return band.modified_band_depth(x, ref, opts["J"])
        if kind == "mhrd":
            return band.modified_half_region_depth(x, ref)
        if kind == "id":
            return integrated.integrated_depth(x, ref, opts["univariate"])
        if kind == "hdepth":
            return integrated.h_depth(x, ref, opts["bandwidth"])
        if kind == "sd":
            return spatial.spatial_depth(x, ref, opts["inner_product"])
        if kind == "hd":
            tol = opts["tol"]
            if projection.span_residual(x, ref, tol) > tol * projection.sample_scale(ref):
                return 0.0
            return projection.random_tukey_depth(x, ref, self.directions())
        if kind == "pd":
            tol = opts["tol"]
            if projection.span_residual(x, ref, tol) > tol * projection.sample_scale(ref):
                return 0.0
            return projection.projection_depth(x, ref, self.directions(), tol)
        if kind == "rtd":
            return projection.random_tukey_depth(x, ref, self.directions())
        if kind == "idd":
            return projection.integrated_dual_depth(x, ref, self.directions(), opts["univariate"])
        raise ParameterError(f"unknown depth kind {kind!r}; choose from {DEPTH_KINDS}")


def _collect_opts(J, univariate, n_directions, bandwidth, seed, tol, inner_product) -> dict:
    return {
        "J": positive_int(J, "J", minimum=2),
        "univariate": univariate,
        "n_directions": positive_int(n_directions, "n_directions"),
        "bandwidth": bandwidth,
        "seed": int(seed),
        "tol": tol,
        "inner_product": inner_product,
    }


def _run(tasks, fn, threads: int):
    if threads == 1:
        return [fn(t) for t in tasks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, tasks))


def depth_profile(
    sample: FunctionalSample,
    kind: str,
    *,
    leave_one_out: bool = True,
    J: int = 2,
    univariate: Optional[str] = None,
    n_directions: int = projection.DEFAULT_DIRECTIONS,
    bandwidth: Optional[float] = None,
    seed: int = 0,
    tol: float = projection.DEFAULT_TOL,
    inner_product: str = "functional-L2",
    threads: Optional[int] = None,
) -> DepthResult:
    """Depth of every sample curve with respect to the rest of the sample.

    With ``leave_one_out`` (the default) row i is scored against the other
    n - 1 rows, so a curve never supports its own depth; pass False for the
    include-self, population-style variant.  Parameters that a kind does
    not use are ignored.  Returns a `DepthResult` whose meta records the
    parameters that were actually in play.
    """
    if kind not in DEPTH_KINDS:
        raise ParameterError(f"unknown depth kind {kind!r}; choose from {DEPTH_KINDS}")
    if leave_one_out and sample.n < 3:
        raise ParameterError("leave-one-out profile needs at least 3 curves")
    threads = _resolve_threads(threads)
    ev = _Evaluator(sample, kind, _collect_opts(J, univariate, n_directions, bandwidth, seed, tol, inner_product))

    if leave_one_out:
        refs = [sample.drop_row(i) for i in range(sample.n)]
        values = _run(range(sample.n), lambda i: ev(sample.row(i), refs[i]), threads)
    else:
        values = _run(range(sample.n), lambda i: ev(sample.row(i), sample), threads)

    meta = dict(ev.meta, leave_one_out=leave_one_out, n=sample.n)
    return DepthResult(kind=kind, values=np.asarray(values), range_hi=ev.range_hi, meta=meta, check_hi=ev.check_hi)


def depth_values(
    curves,
    sample: FunctionalSample,
    kind: str,
    *,
    J: int = 2,
    univariate: Optional[str] = None,
    n_directions: int = projection.DEFAULT_DIRECTIONS,
    bandwidth: Optional[float] = None,
    seed: int = 0,
    tol: float = projection.DEFAULT_TOL,
    inner_product: str = "functional-L2",
    threads: Optional[int] = None,
) -> np.ndarray:
    """Depth of each given curve against a fixed reference sample."""
    if kind not in DEPTH_KINDS:
        raise ParameterError(f"unknown depth kind {kind!r}; choose from {DEPTH_KINDS}")
    rows = as_matrix(curves, "curves")
    if rows.shape[1] != sample.d:
        raise ParameterError(f"curves have {rows.shape[1]} columns, sample grid has {sample.d}")
    threads = _resolve_threads(threads)
    ev = _Evaluator(sample, kind, _collect_opts(J, univariate, n_directions, bandwidth, seed, tol, inner_product))
    values = _run(range(rows.shape[0]), lambda i: ev(rows[i], sample), threads)
    return np.asarray(values)
