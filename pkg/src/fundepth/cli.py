"""Command-line entry point: simulate, depth, report, and diff subcommands.

Every run is a deterministic function of its argv: generators, direction
sets, and plot jitter all derive from the --seed flag, and numbers are
written in round-trip decimal, so re-running a command byte-reproduces
its outputs.  Exit codes: 0 on success, 1 for data errors (unreadable or
malformed input, mismatched grids), 2 for usage and parameter errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

import numpy as np

from .errors import FunDepthError, GridError, ParameterError
from .grid import Grid
from .integrated import UNIVARIATE_KINDS
from .io import load_csv, save_csv
from .profiles import DEPTH_KINDS, depth_profile, depth_values
from .report import (
    five_number_summary,
    format_float,
    render_dotplot_svg,
    sign_agreement,
    write_depth_csv,
    write_diff_csv,
    write_summary_csv,
)
from .simulate import ProcessSpec, generate
from .spatial import INNER_PRODUCTS

SIMULATE_KINDS = ("bm", "fbm", "bridge", "fbb", "gbm", "gauss_seq")


def _equispaced_grid(d: int) -> Grid:
    # d equispaced points strictly inside (0, 1): j/(d+1), j = 1..d
    if d < 1:
        raise ParameterError(f"d must be >= 1, got {d}")
    return Grid(np.arange(1, d + 1, dtype=float) / (d + 1))


def _build_spec(args) -> ProcessSpec:
    if args.kind == "gauss_seq":
        return ProcessSpec.gauss_seq(args.d, args.rho)
    grid = _equispaced_grid(args.d)
    if args.kind == "bm":
        return ProcessSpec.bm(grid)
    if args.kind == "fbm":
        return ProcessSpec.fbm(grid, args.H)
    if args.kind == "bridge":
        return ProcessSpec.bridge(grid)
    if args.kind == "fbb":
        return ProcessSpec.fbb(grid, args.H)
    if args.kind == "gbm":
        return ProcessSpec.gbm(grid, args.r, args.sigma)
    raise ParameterError(f"unknown process kind {args.kind!r}; choose from {SIMULATE_KINDS}")


def _parse_kinds(text: str) -> list:
    kinds = [k.strip() for k in text.split(",") if k.strip()]
    if not kinds:
        raise ParameterError("--kind must name at least one depth kind")
    for k in kinds:
        if k not in DEPTH_KINDS:
            raise ParameterError(f"unknown depth kind {k!r}; choose from {DEPTH_KINDS}")
    return kinds


def _profile_kwargs(args) -> dict:
    return {
        "J": args.J,
        "univariate": args.univariate,
        "n_directions": args.N,
        "bandwidth": args.h,
        "seed": args.seed,
        "tol": args.tol,
        "inner_product": args.inner_product,
    }


def _load_input(path, args):
    return load_csv(path, grid_header=args.grid_header, label_column=args.label_column)


def cmd_simulate(args) -> int:
    spec = _build_spec(args)
    sample = generate(spec, args.n, args.seed)
    save_csv(sample, args.out, grid_header=args.kind != "gauss_seq")
    return 0


def cmd_depth(args) -> int:
    kinds = _parse_kinds(args.kind)
    sample = _load_input(args.input, args)
    results = [
        depth_profile(sample, k, leave_one_out=args.leave_one_out, **_profile_kwargs(args))
        for k in kinds
    ]
    write_depth_csv(args.out, results)
    return 0


def cmd_report(args) -> int:
    kinds = _parse_kinds(args.kind)
    sample = _load_input(args.input, args)
    results = [
        depth_profile(sample, k, leave_one_out=args.leave_one_out, **_profile_kwargs(args))
        for k in kinds
    ]
    write_summary_csv(args.out, [(r.kind, five_number_summary(r.values)) for r in results])
    if args.svg:
        render_dotplot_svg(args.svg, [(r.kind, r.values) for r in results], seed=args.seed)
    return 0


def cmd_diff(args) -> int:
    kinds = _parse_kinds(args.kind)
    sample_a = _load_input(args.input_a, args)
    sample_b = _load_input(args.input_b, args)
    if not sample_a.grid.matches(sample_b.grid):
        raise GridError("the two samples are observed on different grids")

    kwargs = _profile_kwargs(args)
    rows = []
    agreements = []
    panels = []
    for kind in kinds:
        # own group leave-one-out, other group against the full sample;
        # the diff column is depth w.r.t. A minus depth w.r.t. B throughout
        a_vs_a = depth_profile(sample_a, kind, leave_one_out=True, **kwargs).values
        a_vs_b = depth_values(sample_a.values, sample_b, kind, **kwargs)
        b_vs_a = depth_values(sample_b.values, sample_a, kind, **kwargs)
        b_vs_b = depth_profile(sample_b, kind, leave_one_out=True, **kwargs).values
        diff_a = a_vs_a - a_vs_b
        diff_b = b_vs_a - b_vs_b
        for i in range(sample_a.n):
            rows.append(("A", i, a_vs_a[i], a_vs_b[i], kind))
        for i in range(sample_b.n):
            rows.append(("B", i, b_vs_a[i], b_vs_b[i], kind))
        agreements.append(("A", kind, sign_agreement(diff_a, "A")))
        agreements.append(("B", kind, sign_agreement(diff_b, "B")))
        panels.append((f"{kind} group A", diff_a))
        panels.append((f"{kind} group B", diff_b))

    write_diff_csv(args.out, rows)
    if args.svg:
        render_dotplot_svg(args.svg, panels, seed=args.seed)
    print("group,kind,agreement")
    for group, kind, rate in agreements:
        print(f"{group},{kind},{format_float(rate)}")
    return 0


def _add_depth_options(p: argparse.ArgumentParser, leave_flags: bool = True) -> None:
    p.add_argument("--kind", required=True,
                   help="comma-separated depth kinds: " + ", ".join(DEPTH_KINDS))
    p.add_argument("--J", type=int, default=2, help="largest band size for bd/mbd")
    p.add_argument("--N", type=int, default=1000, dest="N",
                   help="random directions for hd/pd/rtd/idd")
    p.add_argument("--h", type=float, default=None, dest="h",
                   help="kernel bandwidth for hdepth (default: median pairwise distance)")
    p.add_argument("--univariate", choices=UNIVARIATE_KINDS, default=None,
                   help="coordinate depth for id/idd (defaults: spatial / halfspace)")
    p.add_argument("--inner-product", dest="inner_product", choices=INNER_PRODUCTS,
                   default="functional-L2", help="norm used by sd")
    p.add_argument("--tol", type=float, default=1e-8,
                   help="relative tolerance of the span-degeneracy test")
    p.add_argument("--seed", type=int, default=0, help="seed for any randomized step")
    p.add_argument("--grid-header", action="store_true",
                   help="first input row holds the grid points")
    p.add_argument("--label-column", action="store_true",
                   help="last input column is a group label")
    if leave_flags:
        group = p.add_mutually_exclusive_group()
        group.add_argument("--leave-one-out", dest="leave_one_out", action="store_true",
                           default=True, help="score each curve against the others (default)")
        group.add_argument("--include-self", dest="leave_one_out", action="store_false",
                           help="score each curve against the full sample")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fundepth",
        description="Depth computations, process simulation, and depth reports for samples of curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="draw a seeded sample from a stochastic process")
    sim.add_argument("--kind", required=True, choices=SIMULATE_KINDS)
    sim.add_argument("--n", type=int, required=True, help="number of curves")
    sim.add_argument("--d", type=int, required=True, help="grid size")
    sim.add_argument("--seed", type=int, required=True)
    sim.add_argument("--H", type=float, default=None, dest="H", help="Hurst index for fbm/fbb")
    sim.add_argument("--r", type=float, default=0.5, dest="r", help="gbm drift rate")
    sim.add_argument("--sigma", type=float, default=0.5, help="gbm volatility")
    sim.add_argument("--rho", type=float, default=0.1, help="gauss_seq coordinate correlation")
    sim.add_argument("--out", required=True, help="output CSV path")
    sim.set_defaults(func=cmd_simulate)

    dep = sub.add_parser("depth", help="per-curve depth table for a dataset")
    dep.add_argument("input", help="dataset CSV")
    _add_depth_options(dep)
    dep.add_argument("--out", required=True, help="depth CSV path (row_index,depth,kind)")
    dep.set_defaults(func=cmd_depth)

    rep = sub.add_parser("report", help="five-number summaries and a dotplot")
    rep.add_argument("input", help="dataset CSV")
    _add_depth_options(rep)
    rep.add_argument("--out", required=True, help="summary CSV path")
    rep.add_argument("--svg", default=None, help="optional dotplot SVG path")
    rep.set_defaults(func=cmd_report)

    dif = sub.add_parser("diff", help="two-sample depth differences and sign agreement")
    dif.add_argument("input_a", help="group A dataset CSV")
    dif.add_argument("input_b", help="group B dataset CSV")
    _add_depth_options(dif, leave_flags=False)
    dif.add_argument("--out", required=True, help="difference CSV path")
    dif.add_argument("--svg", default=None, help="optional dotplot SVG path")
    dif.set_defaults(func=cmd_diff)

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"fundepth: parameter error: {exc}", file=sys.stderr)
        return 2
    except (FunDepthError, OSError) as exc:
        print(f"fundepth: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
