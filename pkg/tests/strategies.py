"""Hypothesis strategies shared across the test modules."""

from __future__ import annotations

from hypothesis import strategies as st

from dschur.partitions import Partition
from dschur.polyring import Kind, Poly, Var

variables = st.one_of(
    st.builds(lambda i: Var(Kind.ALPHA, i), st.integers(-4, 4)),
    st.builds(lambda i: Var(Kind.X, i), st.integers(1, 3)),
    st.builds(lambda i: Var(Kind.Y, i), st.integers(1, 3)),
)

monomials = st.lists(st.tuples(variables, st.integers(1, 3)), max_size=3)


@st.composite
def polys(draw, max_terms: int = 5) -> Poly:
    terms = draw(st.lists(st.tuples(monomials, st.integers(-5, 5)), max_size=max_terms))
    return Poly({tuple(m): c for m, c in terms})


@st.composite
def partitions(draw, max_size: int = 6, max_length: int | None = None) -> Partition:
    parts = draw(st.lists(st.integers(1, max_size), max_size=max_length or max_size))
    parts.sort(reverse=True)
    while sum(parts) > max_size:
        parts.pop(0)
    return Partition(parts)
