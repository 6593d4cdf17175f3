"""Tabular and figure output for depth runs.

All numbers are written through `format_float`, which uses Python's repr.
repr round-trips doubles exactly, so summaries recomputed from a written
depth table match summaries computed from the in-memory values bit for
bit, and identical runs produce byte-identical files.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence
from xml.sax.saxutils import escape

import numpy as np

from .errors import DataFormatError
from .grid import DepthResult

FIVE_NUMBER_FIELDS = ("min", "q1", "median", "q3", "max")

_SVG_WIDTH = 640
_PANEL_HEIGHT = 96
_PLOT_LEFT = 64
_PLOT_RIGHT = _SVG_WIDTH - 20


def format_float(value: float) -> str:
    """Shortest decimal string that parses back to the exact double."""
    return repr(float(value))


def five_number_summary(values) -> tuple:
    """(min, Q1, median, Q3, max) with linear-interpolation quartiles."""
    arr = np.asarray(values, dtype=float).ravel()
    if arr.size == 0:
        raise DataFormatError("cannot summarize an empty value list")
    q = np.percentile(arr, [0, 25, 50, 75, 100])
    return tuple(float(v) for v in q)


def write_depth_csv(path, results: Sequence[DepthResult]) -> None:
    """Write `row_index,depth,kind` rows, one block per result."""
    lines = ["row_index,depth,kind"]
    for res in results:
        for i, v in enumerate(res.values):
            lines.append(f"{i},{format_float(v)},{res.kind}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_depth_csv(path) -> list:
    """Parse a depth table back into (kind, values array) pairs.

    Kinds keep their order of first appearance; rows keep file order.
    """
    text = Path(path).read_text(encoding="utf-8")
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != "row_index,depth,kind":
        raise DataFormatError(f"{path}: expected a depth table with header 'row_index,depth,kind'")
    order: list = []
    groups: dict = {}
    for r, line in enumerate(lines[1:], start=2):
        cells = line.split(",")
        if len(cells) != 3:
            raise DataFormatError(f"{path}: row {r}: expected 3 columns, found {len(cells)}")
        try:
            value = float(cells[1])
        except ValueError:
            raise DataFormatError(f"{path}: row {r}: could not parse depth {cells[1]!r}") from None
        kind = cells[2].strip()
        if kind not in groups:
            groups[kind] = []
            order.append(kind)
        groups[kind].append(value)
    return [(kind, np.asarray(groups[kind])) for kind in order]


def write_summary_csv(path, summaries: Sequence[tuple]) -> None:
    """Write `kind,min,q1,median,q3,max` rows from (kind, five-tuple) pairs."""
    lines = ["kind," + ",".join(FIVE_NUMBER_FIELDS)]
    for kind, fives in summaries:
        lines.append(kind + "," + ",".join(format_float(v) for v in fives))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_diff_csv(path, rows: Sequence[tuple]) -> None:
    """Write two-sample rows (group, row_index, depth_vs_a, depth_vs_b, kind).

    The diff column is always depth w.r.t. sample A minus depth w.r.t.
    sample B, for observations of either group.
    """
    lines = ["group,row_index,depth_vs_a,depth_vs_b,diff,kind"]
    for group, idx, da, db, kind in rows:
        diff = float(da) - float(db)
        lines.append(
            f"{group},{idx},{format_float(da)},{format_float(db)},{format_float(diff)},{kind}"
        )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def sign_agreement(diffs, group: str) -> float:
    """Fraction of points strictly deeper in their own group.

    diffs follow the depth_vs_a - depth_vs_b convention, so group A agrees
    on positive values and group B on negative ones.
    """
    arr = np.asarray(diffs, dtype=float)
    if arr.size == 0:
        raise DataFormatError("cannot compute sign agreement of an empty group")
    if group == "A":
        return float(np.mean(arr > 0))
    if group == "B":
        return float(np.mean(arr < 0))
    raise DataFormatError(f"unknown group {group!r}; expected 'A' or 'B'")


def _panel_range(values: np.ndarray) -> tuple:
    lo = min(0.0, float(values.min()))
    hi = float(values.max())
    if hi <= lo:
        hi = lo + 1.0
    return lo, hi


def render_dotplot_svg(path, panels: Sequence[tuple], seed: int = 0) -> None:
    """Render one jittered dot strip per (label, values) pair.

    The horizontal axis is the value axis; dots are jittered vertically
    with a seeded generator so re-rendering is byte-identical.  Exactly
    one circle is emitted per observation.
    """
    rng = np.random.default_rng(seed)
    height = 16 + _PANEL_HEIGHT * max(len(panels), 1)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_WIDTH}" height="{height}" '
        f'viewBox="0 0 {_SVG_WIDTH} {height}" font-family="sans-serif" font-size="11">',
        f'<rect x="0" y="0" width="{_SVG_WIDTH}" height="{height}" fill="white"/>',
    ]
    for k, (label, raw) in enumerate(panels):
        values = np.asarray(raw, dtype=float).ravel()
        if values.size == 0:
            raise DataFormatError(f"panel {label!r} has no values to plot")
        top = 8 + k * _PANEL_HEIGHT
        axis_y = top + 72
        lo, hi = _panel_range(values)
        span = hi - lo
        parts.append(f'<text x="8" y="{top + 20}" font-weight="bold">{escape(str(label))}</text>')
        parts.append(
            f'<line x1="{_PLOT_LEFT}" y1="{axis_y}" x2="{_PLOT_RIGHT}" y2="{axis_y}" '
            'stroke="#444444" stroke-width="1"/>'
        )
        parts.append(f'<text x="{_PLOT_LEFT}" y="{axis_y + 16}" text-anchor="middle">{lo:.4g}</text>')
        parts.append(f'<text x="{_PLOT_RIGHT}" y="{axis_y + 16}" text-anchor="middle">{hi:.4g}</text>')
        if lo < 0.0 < hi:
            zero_x = _PLOT_LEFT + (0.0 - lo) / span * (_PLOT_RIGHT - _PLOT_LEFT)
            parts.append(
                f'<line x1="{zero_x:.2f}" y1="{top + 28}" x2="{zero_x:.2f}" y2="{axis_y}" '
                'stroke="#999999" stroke-width="1" stroke-dasharray="3,3"/>'
            )
        jitter = rng.uniform(-1.0, 1.0, size=values.size)
        for v, j in zip(values, jitter):
            cx = _PLOT_LEFT + (v - lo) / span * (_PLOT_RIGHT - _PLOT_LEFT)
            cy = axis_y - 22 + 18 * j
            parts.append(
                f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="2.5" fill="#1f6fb4" fill-opacity="0.65"/>'
            )
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n", encoding="utf-8")
