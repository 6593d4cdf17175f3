"""CSV input and output for functional samples.

The on-disk format is plain comma-separated text with a ``.`` decimal mark:
one curve per row, one column per grid point.  An optional first row holds
the grid points; without it the columns get the coordinate grid 1..d with
uniform weights.  An optional trailing column may carry a group label per
row.  Values are written with ``repr`` so a load/save/load round trip
reproduces every float bit for bit.
"""

from __future__ import annotations

import math
from typing import List, Optional

import numpy as np

from .errors import DataFormatError, GridError
from .grid import FunctionalSample, Grid


def _parse_cell(text: str, row: int, col: int) -> float:
    try:
        value = float(text)
    except ValueError:
        raise DataFormatError(
            f"row {row}, column {col}: could not parse {text!r} as a number"
        ) from None
    if not math.isfinite(value):
        raise DataFormatError(
            f"row {row}, column {col}: non-finite value {text!r} (missing data is not supported)"
        )
    return value


def load_csv(path, grid_header: bool = False, label_column: bool = False) -> FunctionalSample:
    """Read a functional sample from a CSV file.

    Parameters
    ----------
    path : str or path-like
        File to read.
    grid_header : bool
        If True the first row holds the (strictly increasing) grid points
        and the grid gets trapezoid weights; otherwise columns are indexed
        1..d with uniform weights.
    label_column : bool
        If True the last cell of every data row is a group label, not a
        value.  A grid header row may either omit the label column or carry
        one extra cell, which is ignored.

    Raises
    ------
    DataFormatError
        On ragged rows, unparseable cells, or non-finite values; messages
        name the offending row and column (1-based, counting data rows).
    GridError
        When the header grid is not strictly increasing.
    """
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line.rstrip("\n").rstrip("\r") for line in fh]
    lines = [line for line in lines if line.strip() != ""]
    if not lines:
        raise DataFormatError(f"{path}: file contains no data")

    header_cells: Optional[List[str]] = None
    if grid_header:
        header_cells = lines[0].split(",")
        lines = lines[1:]
        if not lines:
            raise DataFormatError(f"{path}: grid header present but no data rows")

    rows: List[List[float]] = []
    labels: List[str] = []
    width = None
    for r, line in enumerate(lines, start=1):
        cells = line.split(",")
        if width is None:
            width = len(cells)
            if label_column and width < 2:
                raise DataFormatError(f"row {r}: a label column needs at least two columns")
        elif len(cells) != width:
            raise DataFormatError(
                f"row {r}: expected {width} columns, found {len(cells)}"
            )
        if label_column:
            labels.append(cells[-1].strip())
            cells = cells[:-1]
        rows.append([_parse_cell(c, r, j) for j, c in enumerate(cells, start=1)])

    d = len(rows[0])
    if header_cells is not None:
        if len(header_cells) == d + 1 and label_column:
            header_cells = header_cells[:d]
        if len(header_cells) != d:
            raise DataFormatError(
                f"grid header has {len(header_cells)} columns but data rows have {d}"
            )
        points = [_parse_cell(c, 0, j) for j, c in enumerate(header_cells, start=1)]
        grid = Grid(np.asarray(points))
    else:
        grid = Grid.sequence(d)

    return FunctionalSample(grid, np.asarray(rows), tuple(labels) if label_column else None)


def save_csv(sample: FunctionalSample, path, grid_header: bool = True) -> None:
    """Write a functional sample as CSV at full float precision.

    With ``grid_header`` the first row holds the grid points, which is the
    right format for curves on a real evaluation grid.  Sequence data
    (coordinate grid 1..d) is conventionally written headerless so a plain
    reload restores the same uniform-weight grid.
    """
    lines = []
    if grid_header:
        lines.append(",".join(repr(float(p)) for p in sample.grid.points))
    for i in range(sample.n):
        cells = [repr(float(v)) for v in sample.values[i]]
        if sample.labels is not None:
            cells.append(sample.labels[i])
        lines.append(",".join(cells))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
