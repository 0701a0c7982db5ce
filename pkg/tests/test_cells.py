import pytest
from hypothesis import given, settings

from maxdom.cells import (
    CellKey,
    assign_cells,
    build_grid,
    cell_boxes,
    compress,
    same_dominators_check,
)
from maxdom.instances import GeneratorSpec, generate
from maxdom.model import Instance, weight_of_dom
from maxdom.oracle import oracle_solve
from maxdom.prng import SplitMix64
from maxdom.ranking import as_instance, drop_uncovered, rank_transform
from maxdom.solver import solve_pipeline

from util import random_instance, small_instances


def ranked(inst):
    return drop_uncovered(rank_transform(inst))


def test_single_point_single_cell():
    rr = ranked(Instance.from_rows([(0, 0, 7)], [(1, 1)], 1))
    grid = build_grid(rr)
    assert grid.cells == {CellKey(1, 1): 7}


def test_cancelling_points_keep_zero_weight_cell():
    rr = ranked(Instance.from_rows([(0, 0, 3), (0, 0, -3)], [(1, 1)], 1))
    grid = build_grid(rr)
    assert grid.cells == {CellKey(1, 1): 0}
    assert compress(grid, rr).points == ()  # dropped only at compression time


def test_cell_key_matches_corner_definition():
    # Five queries in strictly decreasing y; x-order of the top three is
    # q3 < q1 < q2.  A point below q3's line, above q4's line, with x between
    # the 1st and 2nd smallest of those x-values lands in cell (3, 2).
    queries = [(50, 90), (70, 80), (10, 70), (90, 40), (30, 20)]
    point = (30, 60, 1)  # 10 < 30 < 50, 40 < 60 < 70
    rr = ranked(Instance.from_rows([point], queries, 1))
    grid = build_grid(rr)
    assert list(grid.cells) == [CellKey(3, 2)]
    # the box's x-range is (x(q3), x(q1)) and its y-range is (y(q4), y(q3))
    x0, y0, x1, y1 = cell_boxes(grid, rr)[CellKey(3, 2)]
    ranked_q = {q.id: q for q in rr.Q}
    assert (x0, x1) == (ranked_q[2].x, ranked_q[0].x)
    assert (y0, y1) == (ranked_q[3].y, ranked_q[2].y)


@settings(deadline=None, max_examples=80)
@given(small_instances())
def test_partition_covers_each_point_once(inst):
    rr = ranked(inst)
    keys = assign_cells(rr)
    grid = build_grid(rr)
    assert len(keys) == len(rr.P)
    assert all(1 <= key.col <= key.row <= rr.m for key in keys)
    assert sum(grid.cells.values()) == sum(p.w for p in rr.P)
    assert len(grid.cells) <= min(max(1, len(rr.P)), rr.m**2)


@settings(deadline=None, max_examples=80)
@given(small_instances(span=6))
def test_cells_share_one_dominator_set(inst):
    rr = ranked(inst)
    assert same_dominators_check(build_grid(rr), rr)


def test_dominator_check_vacuous_without_points():
    rr = ranked(Instance.from_rows([], [(1, 1), (2, 2)], 1))
    assert same_dominators_check(build_grid(rr), rr)


def test_dominator_check_refuses_oversized():
    rr = ranked(Instance.from_rows([(0, 0, 1)], [(1, 1)], 1))
    with pytest.raises(ValueError):
        same_dominators_check(build_grid(rr), rr, max_work=0)


def test_compress_noop_when_cells_are_singletons():
    # diagonal staircase: each point in its own cell
    queries = [(10 * i + 9, 99 - 10 * i) for i in range(5)]
    points = [(10 * i + 1, 91 - 10 * i, i + 1) for i in range(5)]
    rr = ranked(Instance.from_rows(points, queries, 2))
    comp = compress(build_grid(rr), rr)
    assert len(comp.points) == len(rr.P) == 5
    assert sorted(p.w for p in comp.points) == [1, 2, 3, 4, 5]


def test_compress_merges_one_cell_to_single_point():
    inst = generate(GeneratorSpec("one-cell-adversarial", n=10000, m=4, k=2, seed=9))
    rr = ranked(inst)
    comp = compress(build_grid(rr), rr)
    assert len(comp.points) == 1
    assert comp.points[0].w == sum(p.w for p in inst.P)


def test_compress_respects_size_bound():
    rng = SplitMix64(555)
    for _ in range(40):
        inst = random_instance(rng, max_n=60, max_m=7, span=30)
        rr = ranked(inst)
        comp = compress(build_grid(rr), rr)
        assert len(comp.points) <= min(inst.n, inst.m**2)
        assert all(p.w != 0 for p in comp.points)


@settings(deadline=None, max_examples=60)
@given(small_instances(max_m=5, span=8))
def test_compress_preserves_every_subset_weight(inst):
    rr = ranked(inst)
    comp = compress(build_grid(rr), rr)
    for mask in range(2**inst.m):
        sel = [i for i in range(inst.m) if mask >> i & 1]
        orig = weight_of_dom(inst.P, [inst.Q[i] for i in sel])
        compressed = weight_of_dom(comp.points, [rr.Q[i] for i in sel])
        assert orig == compressed


def test_compress_preserves_optimum_for_every_budget():
    rng = SplitMix64(77)
    inst = random_instance(rng, n=30, m=5, k=0, span=12)
    rr = ranked(inst)
    comp = compress(build_grid(rr), rr)
    for k in range(6):
        full = oracle_solve(Instance(inst.P, inst.Q, k)).value
        small = oracle_solve(Instance(comp.points, rr.Q, k)).value
        assert full == small == solve_pipeline(Instance(inst.P, inst.Q, k)).value


@settings(deadline=None, max_examples=50)
@given(small_instances())
def test_grid_of_compressed_equals_nonzero_cells(inst):
    rr = ranked(inst)
    grid = build_grid(rr)
    comp = compress(grid, rr)
    regrid = build_grid(
        type(rr)(comp.points, rr.Q, rr.k, rr.y_order, rr.back_map)
    )
    assert regrid.cells == {key: w for key, w in grid.cells.items() if w != 0}


def test_build_grid_rejects_unranked_instance():
    inst = Instance.from_rows([(0, 0, 1)], [(1, 1)], 1)
    rr = rank_transform(inst)
    fake = type(rr)(inst.P, inst.Q, 1, rr.y_order, rr.back_map)  # raw odd/even mix
    with pytest.raises(ValueError):
        build_grid(fake)


def test_assign_cells_rejects_uncovered_points():
    inst = Instance.from_rows([(5, 5, 1)], [(1, 1)], 1)
    rr = rank_transform(inst)  # deliberately no drop_uncovered
    with pytest.raises(ValueError):
        assign_cells(rr)
