"""maxdom: pick at most k planar query points whose closed lower-left
quadrants cover the maximum total weight of a weighted point set.

The solver normalizes coordinates to rank space, optionally compresses the
ground set to at most min(n, m^2) cell representatives, and runs a layered
dynamic program in O(k*m^2 + n log m) time and O(n + m) space.  An
exhaustive oracle provides ground truth at verification scale.
"""

from .cells import (
    CellGrid,
    CellKey,
    CompressedP,
    assign_cells,
    build_grid,
    cell_boxes,
    compress,
    same_dominators_check,
)
from .coverage import CoverageSweep, RowSums, build_position_table, build_row_sums, row_sum_upto
from .instances import (
    FAMILIES,
    GeneratorSpec,
    ParseError,
    generate,
    parse,
    parse_text,
    serialize,
    serialize_text,
    strict_skyline,
)
from .model import Instance, QueryPoint, Solution, WeightedPoint, dominates_closed, weight_of_dom
from .oracle import oracle_solve
from .prng import SplitMix64
from .ranking import RankedInstance, as_instance, drop_uncovered, rank_transform, y_sorted_queries
from .render import render_svg
from .solver import (
    SENTINEL_ID,
    PipelineResult,
    add_sentinel,
    dp_layers,
    make_sweep_factory,
    run_pipeline,
    solve,
    solve_pipeline,
)

__version__ = "0.1.0"

__all__ = [
    "CellGrid",
    "CellKey",
    "CompressedP",
    "CoverageSweep",
    "FAMILIES",
    "GeneratorSpec",
    "Instance",
    "ParseError",
    "PipelineResult",
    "QueryPoint",
    "RankedInstance",
    "RowSums",
    "SENTINEL_ID",
    "Solution",
    "SplitMix64",
    "WeightedPoint",
    "add_sentinel",
    "as_instance",
    "assign_cells",
    "build_grid",
    "build_position_table",
    "build_row_sums",
    "cell_boxes",
    "compress",
    "dominates_closed",
    "dp_layers",
    "drop_uncovered",
    "generate",
    "make_sweep_factory",
    "oracle_solve",
    "parse",
    "parse_text",
    "rank_transform",
    "render_svg",
    "row_sum_upto",
    "run_pipeline",
    "same_dominators_check",
    "serialize",
    "serialize_text",
    "solve",
    "solve_pipeline",
    "strict_skyline",
    "weight_of_dom",
    "y_sorted_queries",
]
