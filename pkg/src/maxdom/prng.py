"""Deterministic 64-bit generator (SplitMix64) for reproducible corpora.

The stream depends only on the seed and is identical across platforms and
Python versions.  Reference vectors (seed 0 starts 0xE220A8397B1DCDAF,
0x6E789E6AA1B965F4, ...) are pinned in the test suite.  Bounded draws use a
plain modulo; the tiny bias is irrelevant for test corpora and keeping the
mapping trivial keeps it frozen.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1


class SplitMix64:
    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Draw from [0, bound)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def randint(self, lo: int, hi: int) -> int:
        """Draw from [lo, hi] inclusive."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.below(hi - lo + 1)
