"""Core domain types and closed-quadrant coverage semantics.

A query point covers the closed lower-left quadrant ``(-inf, x] x (-inf, y]``.
A weighted point counts toward a selection's value when at least one chosen
query covers it, and it counts exactly once no matter how many chosen queries
cover it.  An empty cover has weight zero.  Weights may be negative.

All types are immutable after construction and all functions here are pure,
so everything is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isfinite
from typing import Iterable, Sequence


@dataclass(frozen=True, slots=True)
class WeightedPoint:
    """A ground-set point carrying a (possibly negative) weight."""

    x: float
    y: float
    w: float

    def __post_init__(self) -> None:
        if not (isfinite(self.x) and isfinite(self.y) and isfinite(self.w)):
            raise ValueError(f"non-finite weighted point ({self.x}, {self.y}, {self.w})")


@dataclass(frozen=True, slots=True)
class QueryPoint:
    """A candidate pick; ``id`` is its stable index in the input order."""

    x: float
    y: float
    id: int

    def __post_init__(self) -> None:
        if not (isfinite(self.x) and isfinite(self.y)):
            raise ValueError(f"non-finite query point ({self.x}, {self.y})")


@dataclass(frozen=True)
class Instance:
    """A problem input: ground set ``P``, query candidates ``Q``, pick budget ``k``.

    ``k`` may exceed ``len(Q)``; that is equivalent to ``k == len(Q)``.
    """

    P: tuple[WeightedPoint, ...]
    Q: tuple[QueryPoint, ...]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "P", tuple(self.P))
        object.__setattr__(self, "Q", tuple(self.Q))
        if len(self.Q) < 1:
            raise ValueError("instance needs at least one query point")
        if self.k < 0:
            raise ValueError("budget k must be non-negative")
        ids = {q.id for q in self.Q}
        if len(ids) != len(self.Q):
            raise ValueError("query ids must be unique")

    @property
    def n(self) -> int:
        return len(self.P)

    @property
    def m(self) -> int:
        return len(self.Q)

    @staticmethod
    def from_rows(points: Iterable[tuple], queries: Iterable[tuple], k: int) -> "Instance":
        """Build from ``(x, y, w)`` and ``(x, y)`` rows, assigning query ids by position."""
        P = tuple(WeightedPoint(x, y, w) for x, y, w in points)
        Q = tuple(QueryPoint(x, y, i) for i, (x, y) in enumerate(queries))
        return Instance(P, Q, k)


@dataclass(frozen=True)
class Solution:
    """A feasible pick set (query ids) together with its covered weight.

    ``layer_values`` optionally records the best value after each budget
    layer of the dynamic program, for diagnostics.
    """

    chosen: frozenset[int]
    value: float
    layer_values: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "chosen", frozenset(self.chosen))


def dominates_closed(q, p) -> bool:
    """True iff ``p`` lies in the closed lower-left quadrant of ``q``."""
    return p.x <= q.x and p.y <= q.y


def weight_of_dom(points: Sequence[WeightedPoint], chosen: Iterable[QueryPoint]) -> float:
    """Total weight of the points covered by at least one query in ``chosen``.

    Each covered point contributes once.  Returns 0 when nothing is covered,
    in particular for an empty ``chosen``.
    """
    queries = tuple(chosen)
    if not queries:
        return 0
    total = 0
    for p in points:
        px, py = p.x, p.y
        for q in queries:
            if px <= q.x and py <= q.y:
                total += p.w
                break
    return total
