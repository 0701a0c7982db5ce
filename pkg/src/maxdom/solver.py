"""Layered dynamic program over the query staircase, plus the full pipeline.

Layer l computes, for every position i in decreasing-y order (sentinel
last), the best covered weight achievable with at most l picks drawn from
the queries in the closed upper-left region of position i, measured on the
points strictly above position i.  A transition picks the lowest selected
query j, whose quadrant contributes the sweep's cov(i, j), and inherits the
rest from layer l-1 at j.  The sentinel placed right of and below everything
turns the final entry into the global optimum.

One fresh coverage sweep is consumed per layer, so no quadratic coverage
table is ever materialized: total space stays O(n + m) plus the O(k*m)
predecessor links used for reconstruction.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from time import perf_counter
from typing import Callable

from .cells import build_grid, compress
from .coverage import CoverageSweep, RowSums, build_position_table, build_row_sums
from .model import Instance, QueryPoint, Solution
from .ranking import RankedInstance, drop_uncovered, rank_transform, y_sorted_queries

SENTINEL_ID = -1
POS_TABLE_ENV = "MAXDOM_POS_TABLE_ENTRIES"


def add_sentinel(rinst: RankedInstance) -> RankedInstance:
    """Append the below-right sentinel query; it is never reported in solutions."""
    m = rinst.m
    sentinel = QueryPoint(2 * m + 3, -1, SENTINEL_ID)
    return replace(rinst, Q=rinst.Q + (sentinel,), y_order=rinst.y_order + (m,))


def _x_positions(rinst: RankedInstance) -> list[float]:
    # index 0 unused; positions are 1-based throughout the sweep and the DP
    return [0] + [q.x for q in y_sorted_queries(rinst)]


def make_sweep_factory(
    rinst: RankedInstance,
    row_sums: RowSums,
    pos_table_entries: int | None = None,
) -> Callable[[], CoverageSweep]:
    """Fresh-sweep factory; one sweep is consumed per DP layer.

    A precomputed column-order table (m(m+1)/2 entries, shared by all layers)
    is used when it fits the entry budget, which defaults to the
    ``MAXDOM_POS_TABLE_ENTRIES`` environment variable and otherwise to 0;
    below the budget each sweep maintains its column order incrementally in
    O(m) extra space.  Both modes produce identical sweeps.
    """
    xs = _x_positions(rinst)
    m = rinst.m
    if pos_table_entries is None:
        pos_table_entries = int(os.environ.get(POS_TABLE_ENV, "0") or "0")
    table = None
    if 0 < m * (m + 1) // 2 <= pos_table_entries:
        table = build_position_table(xs, m)
    return lambda: CoverageSweep(row_sums, xs, table)


def dp_layers(rinst: RankedInstance, sweep_factory: Callable[[], CoverageSweep], k: int | None = None):
    """All layer tables and predecessor links; layer 0 is identically zero.

    Returns ``(tables, preds, k_eff)`` where ``tables[l][i]`` is the layer-l
    optimum at position i (1-based, sentinel last) and ``preds[l][i]`` the
    maximizing position.  Ties resolve to the self-link first and then to the
    smallest position, so an all-zero optimum reconstructs to the empty pick
    set; the optimum value is independent of tie-breaking.
    """
    qs = y_sorted_queries(rinst)
    last = len(qs)
    if qs[-1].id != SENTINEL_ID:
        raise ValueError("sentinel missing: call add_sentinel before solving")
    k_eff = rinst.k if k is None else k
    k_eff = min(k_eff, last - 1)
    qx = [0] + [q.x for q in qs]
    tables: list[list[float]] = [[0] * (last + 1)]
    preds: list[list[int] | None] = [None]
    for _layer in range(1, k_eff + 1):
        sweep = sweep_factory()
        advance = sweep.advance
        cov = sweep.cov  # mutated in place by advance, never reassigned
        t_prev = tables[-1]
        t_cur = [0] * (last + 1)
        pred = [0] * (last + 1)
        t_cur[1] = t_prev[1]
        pred[1] = 1
        for i in range(2, last + 1):
            advance()
            xi = qx[i]
            best = t_prev[i]  # self-link: keep the layer-(l-1) set, pick nothing at i
            bj = i
            for j in range(1, i):
                if qx[j] <= xi:
                    v = t_prev[j] + cov[j]
                    if v > best:
                        best = v
                        bj = j
            t_cur[i] = best
            pred[i] = bj
        tables.append(t_cur)
        preds.append(pred)
    return tables, preds, k_eff


def _chosen_ids(rinst: RankedInstance, preds, k_eff: int) -> frozenset[int]:
    """Walk predecessor links from the sentinel, skipping self-links."""
    qs = y_sorted_queries(rinst)
    ids = []
    i = len(qs)
    for layer in range(k_eff, 0, -1):
        j = preds[layer][i]
        if j != i:
            ids.append(qs[j - 1].id)
        i = j
    return frozenset(ids)


def solve(
    rinst: RankedInstance,
    sweep_factory: Callable[[], CoverageSweep],
    *,
    collect_layers: bool = False,
) -> Solution:
    """Optimal pick set for a ranked, sentinel-extended instance."""
    tables, preds, k_eff = dp_layers(rinst, sweep_factory)
    last = len(rinst.Q)
    layers = tuple(tables[l][last] for l in range(1, k_eff + 1)) if collect_layers else None
    return Solution(_chosen_ids(rinst, preds, k_eff), tables[k_eff][last], layers)


@dataclass
class PipelineResult:
    """A solve with its stage timings and compression statistics."""

    solution: Solution
    n: int
    m: int
    k: int
    retained: int  # ground points surviving drop_uncovered
    compressed_size: int | None  # |P'| when compression ran, else None
    stage_seconds: dict[str, float]


def run_pipeline(
    inst: Instance,
    use_compression: bool = True,
    *,
    pos_table_entries: int | None = None,
    collect_layers: bool = False,
) -> PipelineResult:
    """rank-normalize -> drop uncovered -> (compress) -> sentinel -> layered DP.

    The reported value is identical with and without compression; the pick
    sets may differ but achieve the same value.
    """
    t0 = perf_counter()
    rr = drop_uncovered(rank_transform(inst))
    t1 = perf_counter()
    retained = len(rr.P)
    grid = build_grid(rr)
    compressed_size = None
    if use_compression:
        comp = compress(grid, rr)
        rr = replace(rr, P=comp.points)
        grid = build_grid(rr)
        compressed_size = len(comp.points)
    row_sums = build_row_sums(grid)
    factory = make_sweep_factory(rr, row_sums, pos_table_entries)
    rs = add_sentinel(rr)
    t2 = perf_counter()
    tables, preds, k_eff = dp_layers(rs, factory)
    t3 = perf_counter()
    last = len(rs.Q)
    layers = tuple(tables[l][last] for l in range(1, k_eff + 1)) if collect_layers else None
    solution = Solution(_chosen_ids(rs, preds, k_eff), tables[k_eff][last], layers)
    t4 = perf_counter()
    return PipelineResult(
        solution,
        inst.n,
        inst.m,
        inst.k,
        retained,
        compressed_size,
        {"transform": t1 - t0, "grid": t2 - t1, "dp": t3 - t2, "reconstruct": t4 - t3},
    )


def solve_pipeline(inst: Instance, use_compression: bool = True) -> Solution:
    """End-to-end solve; see ``run_pipeline`` for timings and statistics."""
    return run_pipeline(inst, use_compression).solution
