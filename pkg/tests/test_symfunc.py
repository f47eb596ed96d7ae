import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dschur.laurent import LaurentSeries
from dschur.partitions import Partition, partitions_up_to, subpartitions
from dschur.polyring import Kind, Poly, Var, alpha, e_alpha, shift_alpha, specialize, xvar, yvar
from dschur.symfunc import (
    GENERIC,
    SkewShape,
    SuperContext,
    bialternant,
    classical_super,
    double_e,
    double_e_combinatorial,
    double_h,
    double_h_combinatorial,
    factorial_h,
    factorial_schur_jt,
    omega,
    powersum_super,
    schur_double_jt,
    schur_double_tableaux,
    zero_alpha,
)

x1, x2, y1, y2 = xvar(1), xvar(2), yvar(1), yvar(2)
a = alpha


def test_super_context_validation():
    assert SuperContext(None).generic
    with pytest.raises(ValueError):
        SuperContext(-1)
    with pytest.raises(ValueError):
        GENERIC.finite()


def test_powersums():
    assert powersum_super(1, 1) == x1 + y1
    assert powersum_super(2, 1) == x1**2 - y1**2
    assert powersum_super(3, 2) == x1**3 + x2**3 + y1**3 + y2**3
    with pytest.raises(ValueError):
        powersum_super(0, 1)


def test_classical_super_small():
    assert classical_super("h", 0, 1) == 1
    assert classical_super("h", 2, 1) == x1**2 + x1 * y1
    assert classical_super("e", 2, 1) == y1**2 + x1 * y1


def test_double_h_examples():
    assert double_h(2, 1) == x1**2 + x1 * y1 - a(1) * (x1 + y1)
    assert double_h(2, 1) == (x1 - a(0)) * (x1 - a(1)) + (y1 + a(0)) * (x1 - a(1))
    regrouped = (
        (x2 - a(-1)) * (x2 - a(0))
        + (x2 - a(-1)) * (x1 - a(1))
        + (x1 - a(0)) * (x1 - a(1))
        + ((y1 + a(0)) + (y2 + a(-1))) * ((x2 - a(0)) + (x1 - a(1)))
        + (y1 + a(0)) * (y2 + a(0))
    )
    assert double_h(2, 2) == regrouped
    for s in (-2, 0, 3):
        assert double_h(1, 2, s) == classical_super("h", 1, 2)


def test_double_e_examples():
    assert double_e(2, 1) == x1 * y1 + y1**2 + a(0) * (x1 + y1)
    want = x1 * y1**2 + y1**3 + (a(-1) + a(0)) * (x1 * y1 + y1**2) + a(-1) * a(0) * (x1 + y1)
    assert double_e(3, 1) == want
    assert double_e(0, 2, 5) == 1


@pytest.mark.parametrize("n", range(0, 4))
@pytest.mark.parametrize("s", (-1, 0, 1))
def test_combinatorial_definitions(n, s):
    for k in range(0, 5):
        assert double_h_combinatorial(k, n, s) == double_h(k, n, s)
        assert double_e_combinatorial(k, n, s) == double_e(k, n, s)


def _truncated(coeffs, order):
    return LaurentSeries(0, coeffs, order)


@pytest.mark.parametrize("n", range(1, 4))
def test_double_h_generating_series(n):
    order = 6
    lhs = LaurentSeries.zero(order)
    for k in range(order + 1):
        # z^k / ∏_{i<=k} (1 - α_i z) as a product of geometric series
        basis = LaurentSeries(k, [1], order)
        for i in range(1, k + 1):
            basis = basis * _truncated([a(i) ** t for t in range(order + 1)], order)
        lhs = lhs + basis * double_h(k, n)
    rhs = LaurentSeries(0, [1], order)
    for i in range(1, n + 1):
        geo = [xvar(i) ** t for t in range(order + 1)]
        rhs = rhs * LaurentSeries(0, [1, yvar(i)], None) * _truncated(geo, order)
    assert lhs == rhs


@pytest.mark.parametrize("k", range(1, 6))
def test_shift_recursions(k):
    # e_k(‖σα) = e_k(‖α) + (α_1 - α_{2-k}) e_{k-1}(‖α)
    assert double_e(k, GENERIC, 1) == double_e(k) + (a(1) - a(2 - k)) * double_e(k - 1)
    # h_k(‖σ⁻¹α) = h_k(‖α) + (α_{k-1} - α_0) h_{k-1}(‖α)
    assert double_h(k, GENERIC, -1) == double_h(k) + (a(k - 1) - a(0)) * double_h(k - 1)


@pytest.mark.parametrize("k", range(0, 7))
def test_omega_matches_negated_iota(k):
    def neg_iota(p: Poly) -> Poly:
        return p.map_vars(lambda v: -a(1 - v.index) if v.kind == Kind.ALPHA else None)

    assert omega(double_h(k)) == neg_iota(double_e(k))


@pytest.mark.parametrize("k", range(0, 6))
def test_inverse_expansion_round_trip(k):
    from dschur.polyring import h_alpha

    rebuilt = sum((h_alpha(k - m, 1, m) * double_h(m) for m in range(k + 1)), Poly.const(0))
    assert rebuilt == classical_super("h", k)


@pytest.mark.parametrize("k", range(0, 6))
def test_single_parameter_collapse(k):
    n = 2
    flat = {Kind.ALPHA}

    def collapse(p):
        return p.map_vars(lambda v: a(0) if v.kind in flat else None)

    def shift_vars(p):
        return p.map_vars(
            lambda v: xvar(v.index) - a(0)
            if v.kind == Kind.X
            else (yvar(v.index) + a(0) if v.kind == Kind.Y else None)
        )

    assert collapse(double_h(k, n)) == shift_vars(classical_super("h", k, n))
    assert collapse(double_e(k, n)) == shift_vars(classical_super("e", k, n))


def test_skew_22_over_1():
    sh = SkewShape((2, 2), (1,))
    # det [[h_1(σα), h_3(σ⁻¹α)], [h_0, h_2(σ⁻¹α)]]
    generic = double_h(1, GENERIC, 1) * double_h(2, GENERIC, -1) - double_h(3, GENERIC, -1)
    assert schur_double_jt(sh, GENERIC, "h", 2) == generic
    assert schur_double_jt(sh, 1) == (x1 + y1) * (x1 - a(0)) * (y1 + a(1))
    tableaux = (y1 + a(-1)) * (x1 - a(0)) * (y1 + a(1)) + (x1 - a(-1)) * (x1 - a(0)) * (y1 + a(1))
    assert schur_double_tableaux(sh, 1) == tableaux


def test_single_row_tableaux_listing():
    def w(letter, c):
        i, primed = letter
        return (yvar(i) + a(c)) if primed else (xvar(i) - a(c))

    order = [(1, True), (1, False), (2, True), (2, False)]
    total = Poly.const(0)
    count = 0
    for p, q in itertools.combinations_with_replacement(order, 2):
        if p == q and p[1]:
            continue  # a primed letter may not repeat in a row
        total = total + w(p, 0) * w(q, 1)
        count += 1
    assert count == 8
    assert schur_double_tableaux((2,), 2) == total == double_h(2, 2)


def test_empty_and_single_row_shapes():
    assert schur_double_tableaux((), 2) == 1
    assert schur_double_jt((), 2) == 1
    for k in range(4):
        assert schur_double_jt((k,), GENERIC) == double_h(k)


def test_ell_too_small_rejected():
    with pytest.raises(ValueError, match="too small"):
        schur_double_jt((2, 1, 1), GENERIC, "h", 2)
    with pytest.raises(ValueError, match="too small"):
        schur_double_jt((3, 1), GENERIC, "e", 2)


shapes = [
    SkewShape(lam, mu)
    for lam in partitions_up_to(4)
    for mu in subpartitions(lam)
]


@pytest.mark.parametrize("sh", shapes, ids=str)
def test_jacobi_trudi_bases_and_tableaux_agree(sh):
    h = schur_double_jt(sh, 2, "h")
    assert schur_double_jt(sh, 2, "e") == h
    assert schur_double_tableaux(sh, 2) == h
    # ℓ-stability
    assert schur_double_jt(sh, 2, "h", len(sh.outer) + 2) == h


@pytest.mark.parametrize("lam", [p for p in partitions_up_to(4) if len(p) <= 2], ids=str)
def test_variable_stability(lam):
    drop = {Var(Kind.X, 3): 0, Var(Kind.Y, 3): 0}
    assert specialize(schur_double_jt(lam, 3), drop) == schur_double_jt(lam, 2)


def test_factorial_h_examples():
    assert factorial_h(0, 0) == 1
    assert factorial_h(2, 0) == 0
    assert factorial_h(1, 1) == x1 - a(1)


@pytest.mark.parametrize("n", range(1, 4))
def test_factorial_h_classical_limit(n):
    from dschur.polyring import homog_sym

    xs = [Var(Kind.X, i) for i in range(1, n + 1)]
    for k in range(5):
        assert zero_alpha(factorial_h(k, n)) == homog_sym(xs, k)


def _ssyt_schur(lam, n):
    """Classical Schur polynomial by enumerating semistandard tableaux."""
    cells = list(Partition(lam).cells())
    total = Poly.const(0)
    for fill in itertools.product(range(1, n + 1), repeat=len(cells)):
        t = dict(zip(cells, fill))
        if any(t[(r, c)] > t[(r, c + 1)] for r, c in cells if (r, c + 1) in t):
            continue
        if any(t[(r, c)] >= t[(r + 1, c)] for r, c in cells if (r + 1, c) in t):
            continue
        term = Poly.const(1)
        for v in fill:
            term = term * xvar(v)
        total = total + term
    return total


cases = [(lam, n) for n in range(1, 4) for lam in partitions_up_to(4) if len(lam) <= n]


@pytest.mark.parametrize("lam,n", cases, ids=lambda c: str(c))
def test_bialternant(lam, n):
    b = bialternant(lam, n)
    assert b == factorial_schur_jt(lam, n)
    assert zero_alpha(b) == _ssyt_schur(lam, n)


def test_bialternant_small():
    assert bialternant((), 2) == 1
    assert bialternant((1,), 1) == x1 - a(1)
    with pytest.raises(ValueError):
        bialternant((1, 1, 1), 2)
