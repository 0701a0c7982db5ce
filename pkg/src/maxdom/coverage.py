"""Per-strip running sums and the incremental coverage sweep.

The solver needs, at sweep row i and for every position j <= i (positions
count queries in decreasing y), the total weight of ground points that lie
strictly above the i-th highest query and inside the closed quadrant of the
j-th highest query.  Cell weights make this incremental: moving the sweep
from row i to i+1 adds exactly the strip-i cells left of each query, which
is a prefix of strip i in column order.  Rows store sparse cumulative sums
over their nonzero cells, so one advance costs time linear in the row index
plus the row's stored cells, and a full sweep needs only O(m) working space
beyond the stored sums.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Sequence

from .cells import CellGrid


@dataclass(frozen=True)
class RowSums:
    """rows[i-1] holds (col, cumulative weight) pairs for strip i's nonzero cells."""

    m: int
    rows: tuple[tuple[tuple[int, float], ...], ...]


def build_row_sums(grid: CellGrid) -> RowSums:
    """Sparse prefix sums per strip; zero-weight cells add nothing and are not stored."""
    rows = []
    for items in grid.per_row:
        cum = 0
        pairs = []
        for col, w in items:
            cum += w
            if w != 0:
                pairs.append((col, cum))
        rows.append(tuple(pairs))
    return RowSums(grid.m, tuple(rows))


def row_sum_upto(row_sums: RowSums, row: int, col_bound: int) -> float:
    """Cumulative weight of strip ``row``'s cells with column <= ``col_bound``."""
    pairs = row_sums.rows[row - 1]
    lo, hi = 0, len(pairs)
    while lo < hi:
        mid = (lo + hi) // 2
        if pairs[mid][0] <= col_bound:
            lo = mid + 1
        else:
            hi = mid
    return pairs[lo - 1][1] if lo else 0


def build_position_table(x_by_pos: Sequence[float], m: int) -> tuple[tuple[int, ...], ...]:
    """Column orders for all rows: table[i-1] lists positions 1..i sorted by query x.

    Costs m(m+1)/2 stored entries; sharing it across sweeps trades memory for
    skipping the incremental order maintenance.
    """
    tables: list[tuple[int, ...]] = []
    pi: list[int] = []
    xs: list[float] = []
    for t in range(1, m + 1):
        s = bisect_left(xs, x_by_pos[t])
        xs.insert(s, x_by_pos[t])
        pi.insert(s, t)
        tables.append(tuple(pi))
    return tuple(tables)


class CoverageSweep:
    """Single-owner cursor over rows; restarting reproduces identical values.

    After advancing to row i, ``cov[j]`` equals the total weight of ground
    points strictly above the i-th highest query that the j-th highest query
    covers, for every j <= i; ``cov[i]`` itself is always 0.  Not safe to
    share mid-sweep between threads.
    """

    def __init__(self, row_sums: RowSums, x_by_pos: Sequence[float], pi_table=None):
        self.m = row_sums.m
        self.row_sums = row_sums
        self.current = 1
        self.cov: list[float] = [0] * (self.m + 2)
        self._x_by_pos = x_by_pos
        self._pi_table = pi_table
        if pi_table is None:
            self._pi = [1]
            self._xs = [x_by_pos[1]]

    def advance(self) -> None:
        """Move from row i to i+1 by adding strip i's prefix sums in column order."""
        i = self.current
        if i > self.m:
            raise ValueError("cannot advance past the sentinel row")
        pi = self._pi_table[i - 1] if self._pi_table is not None else self._pi
        pairs = self.row_sums.rows[i - 1]
        cov = self.cov
        ptr, cum, npairs = 0, 0, len(pairs)
        for s1, j in enumerate(pi, 1):
            while ptr < npairs and pairs[ptr][0] <= s1:
                cum = pairs[ptr][1]
                ptr += 1
            cov[j] += cum
        self.current = i + 1
        cov[i + 1] = 0
        if self._pi_table is None and i + 1 <= self.m:
            x = self._x_by_pos[i + 1]
            s = bisect_left(self._xs, x)
            self._xs.insert(s, x)
            self._pi.insert(s, i + 1)
