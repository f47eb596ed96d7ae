import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dschur.laurent import (
    LaurentSeries,
    PrecisionError,
    from_shifted_basis,
    invert_unit,
    residue,
    series_arith,
    shifted_power,
    to_shifted_basis,
    z,
)
from dschur.polyring import Poly, alpha, e_alpha, h_alpha

from strategies import polys

N = 10


def laurent_polys(max_len: int = 5):
    return st.builds(
        lambda v, cs: LaurentSeries(v, cs, None),
        st.integers(-4, 4),
        st.lists(polys(max_terms=3), max_size=max_len),
    )


def test_monomial_products():
    assert (z(-1) * z(1)).agrees_with(1)
    assert series_arith("mul", z(-1), z(1)) == LaurentSeries(0, [1], None)


def test_geometric_series_product():
    geo = LaurentSeries(0, [alpha(0) ** k for k in range(N + 1)], N)
    prod = series_arith("mul", LaurentSeries(0, [1, -alpha(0)], None), geo)
    assert prod == LaurentSeries(0, [1], N)


@given(laurent_polys(), laurent_polys())
def test_product_matches_cauchy_oracle(f, g):
    oracle: dict[int, Poly] = {}
    for i, a in f.items():
        for j, b in g.items():
            oracle[i + j] = oracle.get(i + j, Poly.const(0)) + a * b
    assert f * g == LaurentSeries.from_dict(oracle)


@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_series_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


def test_truncated_product_keeps_min_precision():
    f = LaurentSeries(0, [1, 1], 5)
    g = LaurentSeries(-2, [1], None)
    assert (f * g).order == 3
    assert (f + LaurentSeries(0, [1], 2)).order == 2


def test_invert_unit_examples():
    got = invert_unit(LaurentSeries(0, [1, -alpha(0)], None), 3)
    assert got == LaurentSeries(0, [alpha(0) ** k for k in range(4)], 3)
    got = invert_unit(LaurentSeries(-1, [1, -alpha(0)], None), N)
    assert got == LaurentSeries(1, [alpha(0) ** k for k in range(N)], N)


def test_invert_unit_requires_unit_lead():
    with pytest.raises(ValueError, match="non-invertible leading coefficient"):
        invert_unit(LaurentSeries(0, [2, 1], None), 4)
    with pytest.raises(ValueError, match="non-invertible leading coefficient"):
        invert_unit(LaurentSeries(0, [alpha(1), 1], None), 4)


@given(
    st.integers(-3, 3),
    st.sampled_from([1, -1]),
    st.lists(polys(max_terms=2), max_size=4),
    st.integers(0, 6),
)
@settings(max_examples=50)
def test_invert_unit_multiplies_back(v, u, tail, order):
    f = LaurentSeries(v, [u, *tail], None)
    inv = invert_unit(f, order)
    assert (f * inv).agrees_with(1, order)


def test_shifted_power_positive():
    expected = LaurentSeries(-2, [1, -(alpha(1) + alpha(2)), alpha(1) * alpha(2)], None)
    assert shifted_power(2, 0, None) == expected


@pytest.mark.parametrize("m", range(1, 5))
def test_shifted_power_negative_expansion(m):
    terms = {k: h_alpha(k - m, 1 - m, 0) for k in range(m, N + 1)}
    assert shifted_power(-m, 0, N) == LaurentSeries.from_dict(terms, N)


@pytest.mark.parametrize("k", range(0, 6))
def test_shifted_inversion(k):
    prod = shifted_power(k, 0, None) * shifted_power(-k, k, N + k)
    assert prod.agrees_with(1, N)


@pytest.mark.parametrize("m", range(0, 6))
def test_monomial_in_shifted_basis(m):
    got = to_shifted_basis(z(-m), 0, 0)
    want = {k: h_alpha(m - k, 1, k + 1) for k in range(m + 1)}
    assert got == {k: c for k, c in want.items() if c}


@pytest.mark.parametrize("m", range(0, 4))
def test_positive_monomial_in_shifted_basis(m):
    got = to_shifted_basis(LaurentSeries(m, [1], N), 0, -N)
    want = {-k: e_alpha(k - m, 2 - k, 0) for k in range(m, N + 1)}
    assert got == {k: c for k, c in want.items() if c}


@given(laurent_polys(), st.integers(-2, 2))
@settings(max_examples=60)
def test_basis_round_trip(f, s):
    coeffs = to_shifted_basis(f.truncate(N), s, -N)
    rebuilt = from_shifted_basis(coeffs, s, N)
    assert rebuilt.agrees_with(f, N)


def test_residue_basics():
    assert residue(z(-1)) == 1
    assert residue(z(-2) + z(3)) == 0
    with pytest.raises(PrecisionError, match="insufficient precision"):
        residue(LaurentSeries(-3, [1], -2))


@pytest.mark.parametrize("n", range(-4, 5))
@pytest.mark.parametrize("k", range(-4, 5))
def test_shifted_bases_orthonormal(n, k):
    f = shifted_power(n - k - 1, k, N) * z(-2)
    assert residue(f) == (1 if n == k else 0)


def test_residue_of_degree_minus_two_vanishes():
    rng = random.Random(3)
    for _ in range(40):
        f = z(-2)
        for _ in range(rng.randint(0, 5)):
            f = f * LaurentSeries(-1, [1, -alpha(rng.randint(-4, 4))], None)
        assert residue(f) == 0


@pytest.mark.parametrize("k", range(-4, 5))
def test_z_inverse_times_shifted(k):
    lhs = z(-1) * shifted_power(k, 0, N)
    rhs = shifted_power(k + 1, 0, N) + shifted_power(k, 0, N) * alpha(k + 1)
    assert lhs.agrees_with(rhs, N - 1)


@given(laurent_polys())
def test_json_round_trip(f):
    f = f.truncate(6)
    assert LaurentSeries.from_json(json.loads(json.dumps(f.to_json()))) == f
