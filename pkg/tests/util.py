"""Shared builders for the test suite."""

import hypothesis.strategies as st

from maxdom.model import Instance
from maxdom.prng import SplitMix64


def random_instance(rng: SplitMix64, *, max_n=40, max_m=8, span=20, wlo=-10, whi=10,
                    n=None, m=None, k=None):
    m = m if m is not None else rng.randint(1, max_m)
    n = n if n is not None else rng.randint(0, max_n)
    k = k if k is not None else rng.randint(0, m)
    P = [(rng.below(span), rng.below(span), rng.randint(wlo, whi)) for _ in range(n)]
    Q = [(rng.below(span), rng.below(span)) for _ in range(m)]
    return Instance.from_rows(P, Q, k)


@st.composite
def small_instances(draw, max_n=25, max_m=6, span=12, max_w=10):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(0, max_n))
    k = draw(st.integers(0, m))
    coord = st.integers(0, span)
    P = [(draw(coord), draw(coord), draw(st.integers(-max_w, max_w))) for _ in range(n)]
    Q = [(draw(coord), draw(coord)) for _ in range(m)]
    return Instance.from_rows(P, Q, k)
