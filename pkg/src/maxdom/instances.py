"""Instance file format, parsing, and seeded generator families.

File format (decimal numbers, whitespace separated)::

    # full-line comments start with '#'; blank lines are ignored
    n m k
    x y w      <- n ground-point lines
    x y        <- m query lines; ids are assigned in file order

Integer instances round-trip byte-exactly; float coordinates round-trip
through shortest-exact decimal rendering.

Generators draw every number from SplitMix64, so the same spec yields a
byte-identical instance on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isfinite
from pathlib import Path
from typing import Iterable

from .model import Instance
from .prng import SplitMix64

COORD_SPAN = 1_000_000
MAX_N = 5_000_000
MAX_M = 100_000

FAMILIES = (
    "uniform",
    "clustered",
    "one-cell-adversarial",
    "skyline-unit-weight",
    "negative-mix",
)


class ParseError(ValueError):
    """Malformed instance file; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _number(token: str, line_no: int) -> float:
    try:
        return int(token)
    except ValueError:
        pass
    try:
        value = float(token)
    except ValueError:
        raise ParseError(line_no, f"not a number: {token!r}") from None
    if not isfinite(value):
        raise ParseError(line_no, f"non-finite number: {token!r}")
    return value


def _int(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line_no, f"{what} must be an integer, got {token!r}") from None


def parse_text(text: str) -> Instance:
    rows = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((line_no, line.split()))
    if not rows:
        raise ParseError(1, "empty instance file")
    head_no, head = rows[0]
    if len(head) != 3:
        raise ParseError(head_no, "expected header 'n m k'")
    n = _int(head[0], head_no, "n")
    m = _int(head[1], head_no, "m")
    k = _int(head[2], head_no, "k")
    if n < 0 or m < 1 or k < 0:
        raise ParseError(head_no, "need n >= 0, m >= 1, k >= 0")
    if len(rows) - 1 < n + m:
        raise ParseError(rows[-1][0], f"expected {n + m} data lines after the header, got {len(rows) - 1}")
    if len(rows) - 1 > n + m:
        raise ParseError(rows[1 + n + m][0], "unexpected extra data line")
    points = []
    for line_no, toks in rows[1 : 1 + n]:
        if len(toks) != 3:
            raise ParseError(line_no, f"ground-point line needs 'x y w', got {len(toks)} fields")
        points.append(tuple(_number(t, line_no) for t in toks))
    queries = []
    for line_no, toks in rows[1 + n :]:
        if len(toks) != 2:
            raise ParseError(line_no, f"query line needs 'x y', got {len(toks)} fields")
        queries.append(tuple(_number(t, line_no) for t in toks))
    return Instance.from_rows(points, queries, k)


def parse(path) -> Instance:
    return parse_text(Path(path).read_text())


def _fmt(v) -> str:
    return str(v) if isinstance(v, int) else repr(v)


def serialize_text(inst: Instance) -> str:
    lines = [f"{inst.n} {inst.m} {inst.k}"]
    for p in inst.P:
        lines.append(f"{_fmt(p.x)} {_fmt(p.y)} {_fmt(p.w)}")
    for q in inst.Q:
        lines.append(f"{_fmt(q.x)} {_fmt(q.y)}")
    return "\n".join(lines) + "\n"


def serialize(inst: Instance, path) -> None:
    Path(path).write_text(serialize_text(inst))


@dataclass(frozen=True)
class GeneratorSpec:
    """Deterministic instance recipe; equal specs give byte-identical instances."""

    family: str
    n: int
    m: int
    k: int
    weights: tuple[int, int] = (-10, 10)
    seed: int = 0


def strict_skyline(coords: Iterable[tuple]) -> list[tuple]:
    """Distinct coordinates not strictly dominated by any other input point."""
    pts = sorted(set(coords), key=lambda c: (-c[0], -c[1]))
    out: list[tuple] = []
    best_y = None
    for x, y in pts:
        if best_y is None or y > best_y:
            out.append((x, y))
            best_y = y
    return sorted(out)


def _weights(rng: SplitMix64, n: int, lo: int, hi: int) -> list[int]:
    return [rng.randint(lo, hi) for _ in range(n)]


def _gen_uniform(spec: GeneratorSpec, rng: SplitMix64) -> Instance:
    lo, hi = spec.weights
    points = [
        (rng.below(COORD_SPAN), rng.below(COORD_SPAN), rng.randint(lo, hi))
        for _ in range(spec.n)
    ]
    queries = [(rng.below(COORD_SPAN), rng.below(COORD_SPAN)) for _ in range(spec.m)]
    return Instance.from_rows(points, queries, spec.k)


def _gen_negative_mix(spec: GeneratorSpec, rng: SplitMix64) -> Instance:
    # nonzero weights with random sign, so mixed-sign corpora regardless of range
    magnitude = max(abs(spec.weights[0]), abs(spec.weights[1]), 1)
    points = []
    for _ in range(spec.n):
        w = rng.randint(1, magnitude)
        if rng.below(2):
            w = -w
        points.append((rng.below(COORD_SPAN), rng.below(COORD_SPAN), w))
    queries = [(rng.below(COORD_SPAN), rng.below(COORD_SPAN)) for _ in range(spec.m)]
    return Instance.from_rows(points, queries, spec.k)


def _gen_clustered(spec: GeneratorSpec, rng: SplitMix64) -> Instance:
    lo, hi = spec.weights
    n_clusters = max(1, min(8, spec.m))
    spread = max(1, COORD_SPAN // 200)
    centers = [(rng.below(COORD_SPAN), rng.below(COORD_SPAN)) for _ in range(n_clusters)]
    points = []
    for _ in range(spec.n):
        cx, cy = centers[rng.below(n_clusters)]
        points.append((cx + rng.below(spread), cy + rng.below(spread), rng.randint(lo, hi)))
    queries = [(rng.below(COORD_SPAN), rng.below(COORD_SPAN)) for _ in range(spec.m)]
    return Instance.from_rows(points, queries, spec.k)


def _gen_one_cell(spec: GeneratorSpec, rng: SplitMix64) -> Instance:
    """Every ground point inside one cell of a fixed staircase: maximal compression."""
    if spec.n < 1:
        raise ValueError("one-cell-adversarial needs n >= 1")
    lo, hi = spec.weights
    step = 1000
    queries = [((t + 1) * step, (spec.m - t) * step) for t in range(spec.m)]
    coords = [(1 + rng.below(step - 1), 1 + rng.below(step - 1)) for _ in range(spec.n)]
    weights = _weights(rng, spec.n, lo, hi)
    if sum(weights) == 0:
        weights[-1] += 1  # keep the single cell's total nonzero
    points = [(x, y, w) for (x, y), w in zip(coords, weights)]
    return Instance.from_rows(points, queries, spec.k)


def _gen_skyline(spec: GeneratorSpec, rng: SplitMix64) -> Instance:
    """Unit weights with the queries placed on the ground set's own skyline.

    The query count comes from the data; ``spec.m`` is ignored here.
    """
    if spec.n < 1:
        raise ValueError("skyline-unit-weight needs n >= 1")
    coords = [(rng.below(COORD_SPAN), rng.below(COORD_SPAN)) for _ in range(spec.n)]
    queries = strict_skyline(coords)
    points = [(x, y, 1) for x, y in coords]
    return Instance.from_rows(points, queries, min(spec.k, len(queries)))


_BUILDERS = {
    "uniform": _gen_uniform,
    "clustered": _gen_clustered,
    "one-cell-adversarial": _gen_one_cell,
    "skyline-unit-weight": _gen_skyline,
    "negative-mix": _gen_negative_mix,
}


def generate(spec: GeneratorSpec) -> Instance:
    """Deterministic instance of the requested family."""
    if spec.family not in _BUILDERS:
        raise ValueError(f"unknown family {spec.family!r}; known: {', '.join(FAMILIES)}")
    if not (0 <= spec.n <= MAX_N):
        raise ValueError(f"n out of range [0, {MAX_N}]")
    if not (1 <= spec.m <= MAX_M):
        raise ValueError(f"m out of range [1, {MAX_M}]")
    if spec.weights[0] > spec.weights[1]:
        raise ValueError("weight range is empty")
    return _BUILDERS[spec.family](spec, SplitMix64(spec.seed))
