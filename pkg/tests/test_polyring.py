import itertools
import json
import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dschur.polyring import (
    Kind,
    Poly,
    Var,
    alpha,
    elem_sym,
    factored_latex,
    homog_sym,
    iota_alpha,
    linear_factors,
    poly_arith,
    shift_alpha,
    specialize,
    xvar,
    yvar,
)

from strategies import polys


def naive_product(p: Poly, q: Poly) -> Poly:
    """Double loop over terms, merging exponent vectors by hand."""
    acc: dict[tuple, int] = {}
    for m1, c1 in p.terms():
        for m2, c2 in q.terms():
            exps = Counter(dict(m1))
            exps.update(dict(m2))
            key = tuple(sorted(exps.items()))
            acc[key] = acc.get(key, 0) + c1 * c2
    return Poly(acc)


def random_poly(rng: random.Random, n_terms: int) -> Poly:
    terms = {}
    for _ in range(n_terms):
        mono = []
        for _ in range(rng.randint(0, 4)):
            kind = rng.choice([Kind.ALPHA, Kind.X, Kind.Y])
            idx = rng.randint(-3, 3) if kind is Kind.ALPHA else rng.randint(1, 3)
            mono.append((Var(kind, idx), rng.randint(1, 3)))
        terms[tuple(mono)] = rng.randint(-9, 9) or 1
    return Poly(terms)


def test_additive_inverse():
    assert alpha(1) + (-alpha(1)) == 0
    assert poly_arith("add", alpha(1), -alpha(1)).is_zero()


def test_distributivity_example():
    lhs = poly_arith("mul", xvar(1) - alpha(0), xvar(1) - alpha(1))
    assert lhs == xvar(1) ** 2 - (alpha(0) + alpha(1)) * xvar(1) + alpha(0) * alpha(1)


def test_multiply_matches_naive_oracle():
    rng = random.Random(7)
    for _ in range(50):
        p, q = random_poly(rng, 20), random_poly(rng, 20)
        assert p * q == naive_product(p, q)


def test_unknown_op_rejected():
    with pytest.raises(ValueError):
        poly_arith("div", alpha(0), alpha(1))


def test_xy_index_must_be_positive():
    with pytest.raises(ValueError):
        xvar(0)
    with pytest.raises(ValueError):
        yvar(-1)


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p + q == q + p
    assert p - p == 0


@given(polys(), polys(), st.integers(-3, 3))
def test_shift_is_homomorphism(p, q, m):
    assert shift_alpha(p * q, m) == shift_alpha(p, m) * shift_alpha(q, m)
    assert shift_alpha(p + q, m) == shift_alpha(p, m) + shift_alpha(q, m)
    assert shift_alpha(shift_alpha(p, m), -m) == p


@given(polys(), polys())
def test_iota_is_involutive_homomorphism(p, q):
    assert iota_alpha(iota_alpha(p)) == p
    assert iota_alpha(p * q) == iota_alpha(p) * iota_alpha(q)


@given(polys())
def test_iota_sigma_iota_is_inverse_shift(p):
    assert iota_alpha(shift_alpha(iota_alpha(p), 1)) == shift_alpha(p, -1)


def test_shift_and_iota_examples():
    assert shift_alpha(alpha(0) * alpha(2), 1) == alpha(1) * alpha(3)
    assert shift_alpha(xvar(1) - alpha(1), -1) == xvar(1) - alpha(0)
    assert iota_alpha(alpha(0)) == alpha(1)
    assert iota_alpha(alpha(1)) == alpha(0)
    assert iota_alpha(alpha(-2) + alpha(3)) == alpha(3) + alpha(-2)


def test_elem_sym_examples():
    assert elem_sym([(Var(Kind.ALPHA, 1), -1), (Var(Kind.ALPHA, 2), -1)], 1) == -alpha(1) - alpha(2)
    assert elem_sym([], 3) == 0
    assert elem_sym([], 0) == 1


def test_homog_sym_examples():
    a0, a1 = alpha(0), alpha(1)
    assert homog_sym([a0, a1], 2) == a0**2 + a0 * a1 + a1**2
    assert homog_sym([alpha(5)], 4) == alpha(5) ** 4
    assert homog_sym([], 0) == 1
    assert homog_sym([], 2) == 0


signed_lists = st.lists(
    st.tuples(st.integers(-3, 3), st.sampled_from([1, -1])), max_size=6
)


def _signed(items):
    return [(Var(Kind.ALPHA, i), s) for i, s in items]


def _values(items):
    return [s * alpha(i) for i, s in items]


def _product(vals):
    out = Poly.const(1)
    for v in vals:
        out = out * v
    return out


@given(signed_lists, st.integers(0, 6))
def test_elem_sym_matches_subset_enumeration(items, k):
    vals = _values(items)
    oracle = sum((_product(c) for c in itertools.combinations(vals, k)), Poly.const(0))
    assert elem_sym(_signed(items), k) == oracle


@given(signed_lists, st.integers(0, 6))
@settings(max_examples=60)
def test_homog_sym_matches_multiset_enumeration(items, k):
    vals = _values(items)
    oracle = sum(
        (_product(c) for c in itertools.combinations_with_replacement(vals, k)), Poly.const(0)
    )
    assert homog_sym(_signed(items), k) == oracle


@given(signed_lists, st.integers(0, 6))
def test_newton_style_identity(items, n):
    lst = _signed(items)
    total = sum(
        ((-1) ** i * elem_sym(lst, i) * homog_sym(lst, n - i) for i in range(n + 1)),
        Poly.const(0),
    )
    assert total == (1 if n == 0 else 0)


def test_specialize_examples():
    assert specialize(xvar(1) - alpha(0), {Var(Kind.ALPHA, 0): 0}) == xvar(1)
    p = xvar(1) ** 2 + alpha(3)
    assert specialize(p, {}) == p
    # h_2 of one x/y pair at alpha = 0
    x, y, a0, a1 = xvar(1), yvar(1), alpha(0), alpha(1)
    h2 = (x - a0) * (x - a1) + (y + a0) * (x - a1)
    zero = {Var(Kind.ALPHA, i): 0 for i in range(-1, 3)}
    assert specialize(h2, zero) == x**2 + x * y


def test_specialize_rejects_cycles():
    with pytest.raises(ValueError, match="cyclic"):
        specialize(xvar(1), {Var(Kind.X, 1): xvar(1) + 1})


@given(polys(), polys())
def test_specialize_is_homomorphism(p, q):
    sub = {Var(Kind.ALPHA, 0): xvar(2) - 1, Var(Kind.Y, 1): 3}
    assert specialize(p * q, sub) == specialize(p, sub) * specialize(q, sub)


@given(polys(max_terms=8))
def test_json_round_trip(p):
    data = json.loads(json.dumps(p.to_json()))
    assert Poly.from_json(data) == p


def test_json_schema_shape():
    data = (2 * alpha(-1) * xvar(2) ** 3).to_json()
    assert data == {"terms": [{"c": "2", "m": [["a", -1, 1], ["x", 2, 3]]}]}


@given(polys(), polys())
def test_divide_exact_inverts_multiplication(p, q):
    if q.is_zero():
        return
    assert (p * q).divide_exact(q) == p


def test_divide_exact_rejects_remainder():
    with pytest.raises(ArithmeticError):
        (xvar(1) + 1).divide_exact(xvar(1) - 1)


def test_linear_factors_recover_product():
    x, y = xvar(1), yvar(1)
    p = (x + y) * (x - alpha(0)) * (y + alpha(1)) * 3
    cofactor, factors = linear_factors(p)
    assert cofactor == 3
    assert len(factors) == 3
    assert _product(factors) * cofactor == p


def test_factored_latex_renders_products():
    x, y = xvar(1), yvar(1)
    p = (x + y) * (x - alpha(0)) * (y + alpha(1))
    assert factored_latex(p) == r"(x_{1} + y_{1})(x_{1} - \alpha_{0})(y_{1} + \alpha_{1})"
