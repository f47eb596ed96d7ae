import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dschur.fock import (
    FockVector,
    KetKey,
    apply_current,
    cocycle_currents,
    compose_current_entry,
    current_entry,
    current_entry_residue,
    dual_vacuum_pairing_table,
    ket,
    maya_positions,
    partition_from_positions,
    psi_apply,
    psi_star_apply,
    vacuum_pairing_table,
)
from dschur.partitions import Partition
from dschur.polyring import Poly, alpha, e_alpha

from strategies import partitions

charged_kets = st.builds(lambda lam, m: ket(lam, m), partitions(max_size=6), st.integers(-2, 2))


def A(i, j, k):
    return current_entry(i, j, k)


def test_maya_positions_examples():
    occ = maya_positions(((8, 3, 1), 0), (-6, 12))
    assert occ == {8, 2, -1, -3, -4, -5, -6}
    assert maya_positions(((), 0), (-3, 3)) == {0, -1, -2, -3}
    with pytest.raises(ValueError):
        maya_positions(((8, 3, 1), 0), (-1, 12))
    with pytest.raises(ValueError):
        maya_positions(((8, 3, 1), 0), (-6, 5))


@given(partitions(max_size=12), st.integers(-3, 3))
def test_maya_round_trip(lam, m):
    lo = m - len(lam) - 2
    occ = maya_positions((lam, m), (lo, lam.part(1) + m + 1))
    # oracle: λ_k = pos_k + k - 1 - m
    ordered = sorted(occ, reverse=True)
    assert [p + k - m for k, p in enumerate(ordered[: len(lam)])] == list(lam)
    assert partition_from_positions(occ, lo) == KetKey(lam, m)


def test_psi_examples():
    vac = ket()
    assert psi_apply(1, vac) == ket((), 1)
    assert psi_apply(0, vac) == FockVector()
    assert psi_star_apply(0, vac) == ket((), -1)
    assert psi_star_apply(5, vac) == FockVector()
    # removing the particle at -1 from |∅> passes the one at 0
    assert psi_star_apply(-1, vac) == -ket((1,), -1)


@given(charged_kets, st.integers(-6, 6), st.integers(-6, 6))
@settings(max_examples=80)
def test_canonical_anticommutation(v, i, j):
    anti = psi_apply(i, psi_star_apply(j, v)) + psi_star_apply(j, psi_apply(i, v))
    assert anti == (v if i == j else FockVector())
    assert psi_apply(i, psi_apply(j, v)) + psi_apply(j, psi_apply(i, v)) == FockVector()
    assert (
        psi_star_apply(i, psi_star_apply(j, v)) + psi_star_apply(j, psi_star_apply(i, v))
        == FockVector()
    )


def test_current_entry_examples():
    assert A(3, 3, 0) == 1
    assert A(3, 4, 0) == 0
    assert A(1, 1, -3) == alpha(1) ** 3
    assert A(0, 3, 1) == alpha(1) * alpha(2)


@pytest.mark.parametrize("k", [k for k in range(-4, 5)])
def test_piecewise_matches_residue(k):
    for i in range(-6, 7):
        for j in range(-6, 7):
            assert A(i, j, k) == current_entry_residue(i, j, k), (i, j, k)


def test_compose_examples():
    assert compose_current_entry(0, 0, 2, -2) == 1
    assert compose_current_entry(0, 5, 2, 1) == e_alpha(2, 1, 4)


@pytest.mark.parametrize("k", range(1, 5))
def test_inverse_currents(k):
    for i in range(-6, 7):
        for j in range(-6, 7):
            assert compose_current_entry(i, j, -k, k) == (1 if i == j else 0)


def test_cocycle_values():
    for k in range(1, 7):
        assert cocycle_currents(k, -k, 8) == k
    assert cocycle_currents(2, 3, 8) == 0
    assert cocycle_currents(0, 3, 8) == 0
    with pytest.raises(ValueError):
        cocycle_currents(5, -5, 3)


def test_j_minus_two_on_vacuum():
    want = ket((2,)) - ket((1, 1)) + ket((1,), 0, alpha(0) + alpha(1))
    assert apply_current(-2, ket()) == want


def test_j_three_on_831():
    want = FockVector(
        {
            ((5, 3, 1), 0): A(5, 8, 3),
            ((4, 3, 1), 0): A(4, 8, 3),
            ((3, 3, 1), 0): A(3, 8, 3),
            ((2, 2, 1), 0): -A(1, 8, 3),
            ((2, 1, 1), 0): -A(0, 8, 3),
            ((2,), 0): A(-2, 8, 3),
            ((8,), 0): -A(-2, 2, 3),
        }
    )
    assert apply_current(3, ket((8, 3, 1))) == want


def test_diagonal_term_on_831():
    out = apply_current(-3, ket((8, 3, 1)))
    diag = alpha(8) ** 3 + alpha(2) ** 3 - alpha(0) ** 3 - alpha(-2) ** 3
    assert out.coefficient((8, 3, 1)) == diag


def test_j_zero_rejected():
    with pytest.raises(ValueError, match="J_0"):
        apply_current(0, ket())


def test_positive_currents_kill_vacuum():
    for k in range(1, 5):
        assert apply_current(k, ket()) == FockVector()


@given(partitions(max_size=5), st.integers(1, 3), st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_heisenberg_relations(lam, k, l):
    v = ket(lam)
    comm = apply_current(k, apply_current(-l, v)) - apply_current(-l, apply_current(k, v))
    assert comm == (v * k if k == l else FockVector())


@given(partitions(max_size=5), st.integers(1, 3), st.integers(1, 3), st.sampled_from([1, -1]))
@settings(max_examples=30, deadline=None)
def test_same_sign_currents_commute(lam, k, l, sign):
    v = ket(lam)
    a, b = sign * k, sign * l
    assert apply_current(a, apply_current(b, v)) == apply_current(b, apply_current(a, v))


def test_vacuum_tables_are_identity():
    for n in (0, 3, 8):
        table = vacuum_pairing_table(n)
        assert table == [[Poly.const(int(b == q)) for q in range(n + 1)] for b in range(n + 1)]
    dual = dual_vacuum_pairing_table(6)
    assert dual == [[Poly.const(int(b == q)) for q in range(6)] for b in range(6)]


@given(charged_kets)
def test_fock_json_round_trip(v):
    v = v * (alpha(1) - 2)
    assert FockVector.from_json(json.loads(json.dumps(v.to_json()))) == v


def test_fock_json_schema():
    data = ket((2, 1), 1, 3).to_json()
    assert data == {"kets": [{"partition": [2, 1], "charge": 1, "coeff": {"terms": [{"c": "3", "m": []}]}}]}


def test_fock_linear_ops_canonical():
    v = ket((1,)) + ket((2,))
    assert v - ket((1,)) == ket((2,))
    assert (v - v) == FockVector()
    assert Partition((2,)) in {k.partition for k in v.support()}
