import pytest
from hypothesis import given, settings

from maxdom.cells import build_grid, compress
from maxdom.coverage import build_row_sums
from maxdom.instances import GeneratorSpec, generate
from maxdom.model import Instance, weight_of_dom
from maxdom.oracle import oracle_solve
from maxdom.prng import SplitMix64
from maxdom.ranking import drop_uncovered, rank_transform, y_sorted_queries
from maxdom.solver import (
    SENTINEL_ID,
    add_sentinel,
    dp_layers,
    make_sweep_factory,
    run_pipeline,
    solve,
    solve_pipeline,
)

from util import random_instance, small_instances


def prepared(inst):
    rr = drop_uncovered(rank_transform(inst))
    factory = make_sweep_factory(rr, build_row_sums(build_grid(rr)))
    return add_sentinel(rr), factory


def test_sentinel_construction():
    inst = Instance.from_rows([], [(0, 0), (1, 1), (2, 2)], 1)
    rs, _ = prepared(inst)
    sentinel = rs.Q[-1]
    assert (sentinel.x, sentinel.y, sentinel.id) == (9, -1, SENTINEL_ID)
    assert all(sentinel.x > q.x and sentinel.y < q.y for q in rs.Q[:-1])
    assert y_sorted_queries(rs)[-1] is sentinel


def test_sentinel_upper_left_region_holds_all_queries():
    inst = Instance.from_rows([], [(3, 7), (9, 1), (5, 5)], 2)
    rs, _ = prepared(inst)
    sentinel = rs.Q[-1]
    assert all(q.x <= sentinel.x and q.y >= sentinel.y for q in rs.Q)


def test_solve_requires_sentinel():
    inst = Instance.from_rows([(0, 0, 1)], [(1, 1)], 1)
    rr = drop_uncovered(rank_transform(inst))
    factory = make_sweep_factory(rr, build_row_sums(build_grid(rr)))
    with pytest.raises(ValueError):
        solve(rr, factory)


def test_budget_zero_returns_empty():
    inst = Instance.from_rows([(0, 0, 9)], [(1, 1)], 0)
    sol = solve_pipeline(inst)
    assert sol.chosen == frozenset() and sol.value == 0


def test_full_budget_covers_everything_useful():
    rng = SplitMix64(11)
    for _ in range(25):
        inst = random_instance(rng, max_n=25, max_m=6, span=10, wlo=0, whi=9)
        inst = Instance(inst.P, inst.Q, inst.m)
        assert solve_pipeline(inst).value == weight_of_dom(inst.P, inst.Q)


def test_two_point_two_query_example():
    # (3,3) sits above-right of (2,2) and above (4,1), so only (1,1) is ever
    # covered: the optimum is 5 at every budget (computed by the oracle).
    P = [(1, 1, 5), (3, 3, 5)]
    Q = [(2, 2), (4, 1)]
    for k, expect in ((1, 5), (2, 5)):
        inst = Instance.from_rows(P, Q, k)
        assert oracle_solve(inst).value == expect
        assert solve_pipeline(inst).value == expect


def test_all_negative_weights_return_empty_zero():
    rng = SplitMix64(13)
    for _ in range(30):
        inst = random_instance(rng, max_n=20, max_m=6, span=8, wlo=-9, whi=-1)
        sol = solve_pipeline(inst)
        assert sol.value == 0 and sol.chosen == frozenset()


def test_sentinel_never_reported():
    rng = SplitMix64(17)
    for _ in range(40):
        inst = random_instance(rng, max_n=25, max_m=6, span=10)
        sol = solve_pipeline(inst)
        assert SENTINEL_ID not in sol.chosen
        assert sol.chosen <= {q.id for q in inst.Q}
        assert len(sol.chosen) <= inst.k


def test_layer_values_monotone():
    rng = SplitMix64(19)
    for _ in range(25):
        inst = random_instance(rng, max_n=30, max_m=7, span=12)
        res = run_pipeline(inst, collect_layers=True)
        layers = res.solution.layer_values
        assert all(a <= b for a, b in zip(layers, layers[1:]))


@settings(deadline=None, max_examples=60)
@given(small_instances())
def test_reported_value_is_achieved_by_chosen(inst):
    sol = solve_pipeline(inst)
    chosen = [q for q in inst.Q if q.id in sol.chosen]
    assert weight_of_dom(inst.P, chosen) == sol.value


def reference_tables(rs, k):
    """Independent layer tables: brute-force coverage sums and the literal
    candidate set {j : x(q_j) <= x(q_i), y(q_j) >= y(q_i)}."""
    qs = y_sorted_queries(rs)
    last = len(qs)
    P = rs.P
    cov = [[0] * (last + 1) for _ in range(last + 1)]
    for i in range(1, last + 1):
        for j in range(1, i + 1):
            qi, qj = qs[i - 1], qs[j - 1]
            cov[i][j] = sum(p.w for p in P if p.y > qi.y and p.x <= qj.x and p.y <= qj.y)
    tables = [[0] * (last + 1)]
    for _ in range(k):
        prev = tables[-1]
        cur = [0] * (last + 1)
        for i in range(1, last + 1):
            cur[i] = max(
                prev[j] + cov[i][j]
                for j in range(1, i + 1)
                if qs[j - 1].x <= qs[i - 1].x and qs[j - 1].y >= qs[i - 1].y
            )
        tables.append(cur)
    return tables


def test_layers_match_independent_reference():
    rng = SplitMix64(23)
    for _ in range(20):
        inst = random_instance(rng, max_n=20, max_m=6, span=10)
        rs, factory = prepared(inst)
        k = min(inst.k, inst.m)
        tables, _preds, k_eff = dp_layers(rs, factory)
        assert k_eff == k
        assert tables == reference_tables(rs, k)


def test_pipeline_matches_oracle():
    rng = SplitMix64(29)
    for _ in range(150):
        inst = random_instance(rng, max_n=30, max_m=7, span=14)
        expect = oracle_solve(inst).value
        assert solve_pipeline(inst, True).value == expect
        assert solve_pipeline(inst, False).value == expect


def test_compression_does_not_change_the_value():
    rng = SplitMix64(37)
    for _ in range(40):
        inst = random_instance(rng, max_n=50, max_m=8, span=25)
        assert solve_pipeline(inst, True).value == solve_pipeline(inst, False).value


def test_clustered_input_shrinks_before_the_dp():
    inst = generate(GeneratorSpec("one-cell-adversarial", n=10000, m=5, k=2, seed=3))
    res = run_pipeline(inst)
    assert res.compressed_size == 1 <= min(inst.n, inst.m**2)
    assert res.solution.value == oracle_solve(inst).value


def test_unit_weight_skyline_case():
    for seed in range(8):
        inst = generate(GeneratorSpec("skyline-unit-weight", n=30, m=1, k=3, seed=seed))
        assert solve_pipeline(inst).value == oracle_solve(inst).value


def test_pos_table_budget_does_not_change_results():
    rng = SplitMix64(41)
    for _ in range(15):
        inst = random_instance(rng, max_n=30, max_m=8, span=12)
        a = run_pipeline(inst, pos_table_entries=0).solution
        b = run_pipeline(inst, pos_table_entries=10**6).solution
        assert a == b
