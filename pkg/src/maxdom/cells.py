"""Cell partition of the covered region and the representative compression.

After rank normalization, the region covered by at least one query splits
into axis-aligned cells: horizontal strips between consecutive query
y-values, each strip cut at the x-values of the queries above it.  All
points inside one cell are covered by exactly the same set of queries, so a
cell can be replaced by a single representative carrying the cell's total
weight without changing the value of any pick set.  The compressed ground
set has at most min(n, m^2) points.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from dataclasses import dataclass
from typing import NamedTuple

from .model import WeightedPoint, dominates_closed
from .ranking import RankedInstance, y_sorted_queries


class CellKey(NamedTuple):
    row: int  # strip index: between the row-th and (row+1)-th highest query
    col: int  # x-slot among the queries above the strip, leftmost slot first


@dataclass(frozen=True)
class CellGrid:
    """Sparse per-cell weight totals; zero-weight non-empty cells are kept."""

    m: int
    cells: dict[CellKey, float]
    per_row: tuple[tuple[tuple[int, float], ...], ...]  # per_row[i-1]: (col, weight), col-sorted


@dataclass(frozen=True)
class CompressedP:
    """One representative point per non-empty cell with nonzero total weight."""

    points: tuple[WeightedPoint, ...]
    provenance: tuple[CellKey, ...]


def _check_parity(rinst: RankedInstance) -> None:
    if any(q.x % 2 or q.y % 2 for q in rinst.Q) or any(
        not (p.x % 2) or not (p.y % 2) for p in rinst.P
    ):
        raise ValueError(
            "instance is not rank-normalized (expected odd point / even query coordinates)"
        )


def assign_cells(rinst: RankedInstance) -> list[CellKey]:
    """Cell key for every ground point; requires drop_uncovered beforehand.

    Strips are processed bottom-up in index order while an ordered list of
    the query x-values above the strip grows by one per step, so each point
    costs two predecessor searches.
    """
    _check_parity(rinst)
    qs = y_sorted_queries(rinst)
    m = len(qs)
    ys_asc = sorted(q.y for q in qs)
    strip_members: dict[int, list[int]] = {}
    for idx, p in enumerate(rinst.P):
        i = m - bisect_left(ys_asc, p.y)  # number of queries strictly above p
        if i == 0:
            raise ValueError("point above every query; run drop_uncovered first")
        strip_members.setdefault(i, []).append(idx)
    keys: list[CellKey] = [CellKey(0, 0)] * len(rinst.P)
    xs_prefix: list[float] = []
    for i in range(1, m + 1):
        insort(xs_prefix, qs[i - 1].x)
        for idx in strip_members.get(i, ()):
            c = bisect_left(xs_prefix, rinst.P[idx].x)  # queries left of p among the first i
            if c == i:
                raise ValueError("point right of every query above it; run drop_uncovered first")
            keys[idx] = CellKey(i, c + 1)
    return keys


def build_grid(rinst: RankedInstance) -> CellGrid:
    """Aggregate point weights per cell."""
    keys = assign_cells(rinst)
    cells: dict[CellKey, float] = {}
    for key, p in zip(keys, rinst.P):
        cells[key] = cells.get(key, 0) + p.w
    row_items: list[list[tuple[int, float]]] = [[] for _ in range(rinst.m)]
    for key in sorted(cells):
        row_items[key.row - 1].append((key.col, cells[key]))
    return CellGrid(rinst.m, cells, tuple(tuple(r) for r in row_items))


def cell_boxes(grid: CellGrid, rinst: RankedInstance) -> dict[CellKey, tuple]:
    """``(x_lo, y_lo, x_hi, y_hi)`` in rank coordinates for every non-empty cell."""
    qs = y_sorted_queries(rinst)
    boxes: dict[CellKey, tuple] = {}
    xs_prefix: list[float] = []
    for i in range(1, grid.m + 1):
        insort(xs_prefix, qs[i - 1].x)
        row = grid.per_row[i - 1]
        if not row:
            continue
        y_hi = qs[i - 1].y
        y_lo = qs[i].y if i < grid.m else 0
        for col, _w in row:
            x_lo = xs_prefix[col - 2] if col >= 2 else 0
            boxes[CellKey(i, col)] = (x_lo, y_lo, xs_prefix[col - 1], y_hi)
    return boxes


def compress(grid: CellGrid, rinst: RankedInstance) -> CompressedP:
    """Replace each nonzero-weight cell by one interior representative point.

    Representatives sit one unit up-right of the cell's lower-left corner, so
    they keep odd coordinates and are covered by exactly the queries that
    cover the cell.  For every subset of queries, the covered representatives
    carry exactly the weight of the covered original points.
    """
    boxes = cell_boxes(grid, rinst)
    points: list[WeightedPoint] = []
    provenance: list[CellKey] = []
    for key in sorted(boxes):
        w = grid.cells[key]
        if w == 0:
            continue
        x_lo, y_lo, _x_hi, _y_hi = boxes[key]
        points.append(WeightedPoint(x_lo + 1, y_lo + 1, w))
        provenance.append(key)
    return CompressedP(tuple(points), tuple(provenance))


def same_dominators_check(grid: CellGrid, rinst: RankedInstance, max_work: int = 10**6) -> bool:
    """Exhaustively confirm that the points of each cell share one cover set.

    Verification helper, quadratic on purpose; refuses oversized instances.
    """
    if len(rinst.P) * max(1, rinst.m) > max_work:
        raise ValueError("instance too large for the exhaustive dominator check")
    keys = assign_cells(rinst)
    seen: dict[CellKey, frozenset[int]] = {}
    for key, p in zip(keys, rinst.P):
        if key not in grid.cells:
            return False
        covers = frozenset(q.id for q in rinst.Q if dominates_closed(q, p))
        if seen.setdefault(key, covers) != covers:
            return False
    return True
