"""Shared test configuration: hypothesis profiles and graph strategies."""

from __future__ import annotations

import os

from hypothesis import HealthCheck, settings, strategies as st

from srgforge import Graph

settings.register_profile(
    "ci", max_examples=100, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("quick", max_examples=20, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


def graph_from_bits(n: int, bits: int) -> Graph:
    """Upper-triangle bit pattern -> Graph, column-major like graph6."""
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(rows))


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 12):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = n * (n - 1) // 2
    bits = draw(st.integers(min_value=0, max_value=(1 << pairs) - 1))
    return graph_from_bits(n, bits)


@st.composite
def permutations_of(draw, n: int):
    return tuple(draw(st.permutations(range(n))))
