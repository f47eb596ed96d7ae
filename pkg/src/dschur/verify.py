"""Named identity suites shared by the command line and the test-suite.

Each suite is a generator of :class:`Check` objects (a label plus the two
sides of an exact identity).  :func:`run_suite` consumes a suite, stops at
the first mismatch and reports it as the counterexample.
"""

from __future__ import annotations

import random
import time
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from typing import Any

from .expand import (
    SchurExpansion,
    classical_schur_expansion,
    hsymbol_evaluate,
    mn_derivative,
    mn_multiply,
    pieri_e_coeff,
    pieri_e_expansion,
    pieri_h_coeff,
    pieri_h_expansion,
    raising_expansion,
    skew_pieri_coeff,
    skew_pieri_expansion,
)
from .fock import (
    FockVector,
    apply_current,
    compose_current_entry,
    cocycle_currents,
    current_entry,
    current_entry_residue,
    dual_vacuum_pairing_table,
    ket,
    maya_positions,
    vacuum_pairing_table,
)
from .laurent import LaurentSeries, from_shifted_basis, residue, shifted_power, to_shifted_basis, z
from .partitions import (
    Partition,
    is_horizontal_strip,
    is_vertical_strip,
    partitions_of,
    partitions_up_to,
    ribbon_height,
    subpartitions,
)
from .polyring import (
    Kind,
    Poly,
    Var,
    alpha,
    e_alpha,
    h_alpha,
    specialize,
    xvar,
    yvar,
)
from .symfunc import (
    GENERIC,
    SkewShape,
    bialternant,
    classical_super,
    double_e,
    double_e_combinatorial,
    double_h,
    double_h_combinatorial,
    factorial_schur_jt,
    omega,
    powersum_super,
    schur_classical,
    schur_double_jt,
    schur_double_tableaux,
    zero_alpha,
)

__all__ = [
    "Check",
    "VerifyConfig",
    "SuiteResult",
    "SUITES",
    "run_suite",
    "run_suites",
    "schur_any",
]


@dataclass(frozen=True)
class Check:
    """One instance of an identity: ``lhs == rhs`` must hold exactly."""

    label: str
    lhs: Any
    rhs: Any

    def holds(self) -> bool:
        return bool(self.lhs == self.rhs)


@dataclass(frozen=True)
class VerifyConfig:
    """Sizes and truncation used by the suites.

    ``max_size`` caps every partition-size window (``None`` keeps each
    suite's own default); ``order`` is the truncation order of formal
    series; ``window`` is the site window for cocycle and vacuum tables.
    """

    max_size: int | None = None
    order: int = 10
    window: int = 8
    seed: int = 0

    def size(self, default: int) -> int:
        return default if self.max_size is None else min(default, self.max_size)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    cases: int
    seconds: float
    counterexample: Check | None = None

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.cases} cases in {self.seconds:.2f}s"

    def details(self) -> str:
        if self.counterexample is None:
            return ""
        c = self.counterexample
        return f"  counterexample: {c.label}\n    lhs = {c.lhs}\n    rhs = {c.rhs}"


Suite = Callable[[VerifyConfig], Iterator[Check]]


def schur_any(shape, ctx=GENERIC) -> Poly:
    """Double Schur function using whichever Jacobi–Trudi matrix is smaller."""
    sh = SkewShape.of(shape)
    o = sh.outer
    basis = "h" if len(o) <= (o[0] if o else 0) else "e"
    return schur_double_jt(sh, ctx, basis)


def _one() -> Poly:
    return Poly.const(1)


def _delta(cond: bool, value: int = 1) -> Poly:
    return Poly.const(value if cond else 0)


# -- shifted powers -------------------------------------------------------------


def suite_shifted_cob(cfg: VerifyConfig) -> Iterator[Check]:
    """The four power/shifted-power conversions and exact round trips."""
    N = cfg.order
    for m in range(1, 7):
        # z^{-m} in shifted powers
        expected = {k: h_alpha(m - k, 1, k + 1) for k in range(m + 1)}
        got = to_shifted_basis(z(-m), 0, 0)
        yield Check(f"z^-{m} -> shifted", _nonzero(got), _nonzero(expected))
        yield Check(f"z^-{m} round trip", from_shifted_basis(got, 0, None), z(-m))
        # (z⁻¹|α)^m in powers of z
        exact = LaurentSeries.from_dict({-k: e_alpha(m - k, 1, m, -1) for k in range(m + 1)})
        yield Check(f"(z^-1|a)^{m} -> powers", shifted_power(m), exact)
        # z^m in negative shifted powers
        got = to_shifted_basis(z(m), 0, -N)
        expected = {-k: e_alpha(k - m, 2 - k, 0, -1) for k in range(m, N + 1)}
        yield Check(f"z^{m} -> shifted (order {N})", _nonzero(got), _nonzero(expected))
        back = from_shifted_basis(got, 0, N)
        yield Check(f"z^{m} round trip", back, z(m).truncate(N))
        # (z⁻¹|α)^{-m} in powers of z
        series = LaurentSeries.from_dict({k: h_alpha(k - m, 1 - m, 0) for k in range(m, N + 1)}, N)
        yield Check(f"(z^-1|a)^-{m} -> powers", shifted_power(-m, 0, N), series)
    # 1/(z⁻¹|α)^k = (z⁻¹|σ^k α)^{-k}
    for k in range(-6, 7):
        # each factor carries |k| extra terms to absorb the other's pole
        prod = (_shifted(k, 0, N + abs(k)) * _shifted(-k, k, N + abs(k))).truncate(N)
        yield Check(f"inversion k={k}", prod, LaurentSeries(0, [1], N))


def suite_basis_roundtrip(cfg: VerifyConfig) -> Iterator[Check]:
    """Random Laurent polynomials through the shifted basis and back."""
    N = cfg.order
    rng = random.Random(cfg.seed)
    for case in range(50):
        f = _random_laurent(rng, N)
        s = rng.randint(-3, 3)
        coeffs = to_shifted_basis(f, s, -N)
        back = from_shifted_basis(coeffs, s, N)
        yield Check(f"random round trip #{case} (shift {s}): {f}", back, f.truncate(N))


def _shifted(k: int, s: int, order: int) -> LaurentSeries:
    return shifted_power(k, s, order).truncate(order)


def _nonzero(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def _random_poly(rng: random.Random) -> Poly:
    acc = Poly.const(rng.randint(-3, 3))
    for _ in range(rng.randint(0, 2)):
        acc = acc + alpha(rng.randint(-3, 3)) * rng.randint(-2, 2)
    return acc


def _random_laurent(rng: random.Random, order: int) -> LaurentSeries:
    lo = rng.randint(-5, 2)
    hi = rng.randint(lo, min(order, lo + 6))
    return LaurentSeries(lo, [_random_poly(rng) for _ in range(lo, hi + 1)], None)


def suite_shifted_action(cfg: VerifyConfig) -> Iterator[Check]:
    """Multiplication by ``z^{±1}`` and the shift ``σ`` on shifted powers."""
    N = cfg.order
    for k in range(-6, 7):
        lhs = (z(-1) * _shifted(k, 0, N + 1)).truncate(N)
        rhs = (_shifted(k + 1, 0, N) + _shifted(k, 0, N) * alpha(k + 1)).truncate(N)
        yield Check(f"z^-1 (z^-1|a)^{k}", lhs, rhs)
        lhs = (z(1) * _shifted(k, 0, N)).truncate(N)
        rhs = LaurentSeries.zero(N)
        coeff = _one()
        m = 0
        while 1 + m - k <= N:
            rhs = rhs + _shifted(k - m - 1, 0, N) * coeff
            coeff = coeff * alpha(k - m) * -1
            m += 1
        yield Check(f"z (z^-1|a)^{k}", lhs, rhs.truncate(N))
        lhs = _shifted(k, -1, N)
        rhs = (_shifted(k, 0, N) + _shifted(k - 1, 0, N) * (alpha(k) - alpha(0))).truncate(N)
        yield Check(f"(z^-1|s^-1 a)^{k}", lhs, rhs)
        # 1/(z⁻¹|β)^k = (z⁻¹|σ^k β)^{-k}
        lhs = _shifted(-k, k + 1, N)
        rhs = (_shifted(-k, k, N) + _shifted(-k - 1, k + 1, N) * (alpha(k + 1) - alpha(1))).truncate(N)
        yield Check(f"1/(z^-1|s a)^{k}", lhs, rhs)


def _factor(i: int, order: int) -> LaurentSeries:
    return LaurentSeries(-1, [1, -alpha(i)], None)


def _inverse_factor(i: int, order: int) -> LaurentSeries:
    """``(z⁻¹ - α_i)⁻¹ = z/(1 - α_i z)``."""
    a = alpha(i)
    cs = [_one()]
    for _ in range(order + 1):
        cs.append(cs[-1] * a)
    return LaurentSeries(1, cs, order)


def suite_orthonormality(cfg: VerifyConfig) -> Iterator[Check]:
    """Residue pairings of shifted powers, with seeded random index tuples."""
    rng = random.Random(cfg.seed)
    N = 12
    for case in range(200):
        n, k = rng.randint(-6, 6), rng.randint(-6, 6)
        f = _shifted(n - 1, 0, N) * _shifted(-k, k, N)
        yield Check(f"#{case} orthonormality n={n} k={k}", residue(f.shift(-2)), _delta(n == k))
        g = _shifted(n - k - 1, k, N).shift(-2)
        yield Check(f"#{case} shifted form n={n} k={k}", residue(g), _delta(n == k))
        idx = [rng.randint(-6, 6) for _ in range(rng.randint(0, 6))]
        prod = LaurentSeries(0, [1], None)
        for i in idx:
            prod = prod * _factor(i, N)
        yield Check(f"#{case} polynomial residue {idx}", residue(prod.shift(-2)), _delta(False))
        kk = rng.randint(1, 6)
        kp = rng.randint(0, kk - 1)
        top = [rng.randint(-6, 6) for _ in range(kp)]
        bottom = [rng.randint(-6, 6) for _ in range(kk)]
        ratio = LaurentSeries(0, [1], N)
        for i in top:
            ratio = ratio * _factor(i, N)
        for i in bottom:
            ratio = ratio * _inverse_factor(i, N)
        yield Check(
            f"#{case} ratio residue {top}/{bottom}",
            residue(ratio.shift(-2)),
            _delta(kk == kp + 1),
        )


# -- scalar identities ---------------------------------------------------------


def suite_cocyclecase(cfg: VerifyConfig) -> Iterator[Check]:
    for k in range(1, 7):
        for ell in range(k, 7):
            acc = Poly.const(0)
            for j in range(1, ell + 1):
                for i in range(j - ell, min(0, j - k) + 1):
                    acc = acc + h_alpha(i - j + ell, i, j) * e_alpha(j - i - k, i + 1, j - 1, -1)
            yield Check(f"k={k} l={ell}", acc, _delta(k == ell, k))


def suite_heidentity(cfg: VerifyConfig) -> Iterator[Check]:
    for i in range(-4, 5):
        for j in range(i, 5):
            for k in range(-2, 7):
                acc = Poly.const(0)
                for t in range(i, j + 1):
                    acc = acc + h_alpha(t - i, t - k, i) * e_alpha(j - t, t - k + 1, j - 1, -1)
                yield Check(f"i={i} j={j} k={k}", acc, _delta(i == j))


def suite_product_cob(cfg: VerifyConfig) -> Iterator[Check]:
    for m in range(0, 7):
        for j in range(0, m + 1):
            first = sum(
                (h_alpha(k, 1, m - k + 1) * e_alpha(j - k, 1, m - k, -1) for k in range(j + 1)),
                Poly.const(0),
            )
            second = sum(
                (e_alpha(k, 1, m, -1) * h_alpha(j - k, 1, m - j + 1) for k in range(j + 1)),
                Poly.const(0),
            )
            yield Check(f"first m={m} j={j}", first, _delta(j == 0))
            yield Check(f"second m={m} j={j}", second, _delta(j == 0))


# -- currents -----------------------------------------------------------------


def suite_currents(cfg: VerifyConfig) -> Iterator[Check]:
    """Composition, inverse and residue form of the current matrix entries."""
    for k in range(-4, 5):
        for p in range(-8, 9):
            for q in range(-8, 9):
                if k:
                    yield Check(
                        f"entry({p},{q},{k}) piecewise vs residue",
                        current_entry(p, q, k),
                        current_entry_residue(p, q, k),
                    )
                for l in range(-4, 5):  # noqa: E741
                    yield Check(
                        f"compose({p},{q},{k},{l})",
                        compose_current_entry(p, q, k, l),
                        current_entry(p, q, k + l),
                    )
    for k in range(1, 5):
        for i in range(-6, 7):
            for j in range(-6, 7):
                acc = Poly.const(0)
                for t in range(i - k, i + 1):
                    acc = acc + current_entry(i, t, -k) * current_entry(t, j, k)
                yield Check(f"inverse i={i} j={j} k={k}", acc, _delta(i == j))


def _commutator(a: int, b: int, v: FockVector) -> FockVector:
    return apply_current(a, apply_current(b, v)) - apply_current(b, apply_current(a, v))


def suite_heisenberg(cfg: VerifyConfig) -> Iterator[Check]:
    """``[J_k, J_ℓ] = k δ_{k,-ℓ}`` on Fock vectors, and the cocycle table."""
    for lam in partitions_up_to(cfg.size(6)):
        v = ket(lam)
        for k in range(1, 5):
            for ell in range(1, 5):
                yield Check(
                    f"[J_{k}, J_-{ell}] on |{lam}>",
                    _commutator(k, -ell, v),
                    v * (k if k == ell else 0),
                )
                if k < ell:
                    yield Check(f"[J_{k}, J_{ell}] on |{lam}>", _commutator(k, ell, v), FockVector())
                    yield Check(
                        f"[J_-{k}, J_-{ell}] on |{lam}>", _commutator(-k, -ell, v), FockVector()
                    )
    for k in range(-5, 6):
        for ell in range(-5, 6):
            yield Check(
                f"cocycle({k},{ell})",
                cocycle_currents(k, ell, cfg.window),
                _delta(k == -ell, k),
            )


def suite_vacuum(cfg: VerifyConfig) -> Iterator[Check]:
    n = cfg.window
    table = vacuum_pairing_table(n)
    for b in range(n + 1):
        for q in range(n + 1):
            yield Check(f"pairing w^{b} z^-{q}", table[b][q], _delta(b == q))
    dual = dual_vacuum_pairing_table(n)
    for b in range(n):
        for q in range(n):
            yield Check(f"dual pairing z^{b + 1} w^-{q + 1}", dual[b][q], _delta(b == q))


# -- double functions -----------------------------------------------------------


def _product_series(n: int, order: int, sign: int) -> LaurentSeries:
    """``∏_{i<=n} ((1 + y_i z)/(1 - x_i z))^{sign}`` to ``z^order``."""
    acc = LaurentSeries(0, [1], order)
    for i in range(1, n + 1):
        x, y = xvar(i), yvar(i)
        if sign > 0:
            num, den = y, x
        else:
            num, den = -x, -y
        geo = [_one()]
        for _ in range(order):
            geo.append(geo[-1] * den)
        acc = acc * LaurentSeries(0, [1, num], None) * LaurentSeries(0, geo, order)
    return acc


def suite_double_gf(cfg: VerifyConfig) -> Iterator[Check]:
    """Generating series of the double ``h`` and ``e`` against the product side."""
    N = 8
    for n in range(0, 4):
        lhs_h = LaurentSeries.zero(N)
        lhs_e = LaurentSeries.zero(N)
        for k in range(N + 1):
            lhs_h = lhs_h + _shifted(-k, k, N) * double_h(k, n)
            lhs_e = lhs_e + _shifted(-k, 0, N) * double_e(k, n).scale(-1 if k % 2 else 1)
        yield Check(f"h series n={n}", lhs_h, _product_series(n, N, 1))
        yield Check(f"e series n={n}", lhs_e, _product_series(n, N, -1))


def suite_eh_roundtrip(cfg: VerifyConfig) -> Iterator[Check]:
    """Classical ``h_k``/``e_k`` recovered from the double ones."""
    for k in range(1, 7):
        h = sum((h_alpha(k - m, 1, m) * double_h(m) for m in range(1, k + 1)), Poly.const(0))
        yield Check(f"h_{k}", h, classical_super("h", k))
        e = sum(
            (h_alpha(k - m, 1 - m, 0, -1) * double_e(m) for m in range(1, k + 1)), Poly.const(0)
        )
        yield Check(f"e_{k}", e, classical_super("e", k))


def _shifted_value(x: Poly, m: int, t: int) -> Poly:
    acc = _one()
    for u in range(1, m + 1):
        acc = acc * (x - alpha(t + u))
    return acc


def suite_shift_eh(cfg: VerifyConfig) -> Iterator[Check]:
    """How ``σ^{±1}`` acts on the double ``h`` and ``e``."""
    for k in range(1, 7):
        yield Check(
            f"e_{k}(s a)",
            double_e(k, GENERIC, 1),
            double_e(k) + (alpha(1) - alpha(2 - k)) * double_e(k - 1),
        )
        yield Check(
            f"h_{k}(s^-1 a)",
            double_h(k, GENERIC, -1),
            double_h(k) + (alpha(k - 1) - alpha(0)) * double_h(k - 1),
        )
        yield Check(
            f"h_{k}(s a) recursion",
            double_h(k, GENERIC, 1),
            double_h(k) - (alpha(k) - alpha(1)) * double_h(k - 1, GENERIC, 1),
        )
        yield Check(
            f"h_{k}(s a) sum",
            double_h(k, GENERIC, 1),
            sum(
                (_shifted_value(alpha(1), m, k - m) * double_h(k - m) for m in range(k)),
                Poly.const(0),
            ),
        )
        yield Check(
            f"e_{k}(s^-1 a) recursion",
            double_e(k, GENERIC, -1),
            double_e(k) - (alpha(0) - alpha(1 - k)) * double_e(k - 1, GENERIC, -1),
        )
        inv = Poly.const(0)
        for m in range(k):
            c = _one()
            for u in range(1, m + 1):
                c = c * (alpha(0) - alpha(u - k))
            inv = inv + c * double_e(k - m) * (-1 if m % 2 else 1)
        yield Check(f"e_{k}(s^-1 a) sum", double_e(k, GENERIC, -1), inv)


def _neg_iota(p: Poly) -> Poly:
    return p.map_vars(lambda v: -alpha(1 - v.index) if v.kind == Kind.ALPHA else None)


def suite_omega(cfg: VerifyConfig) -> Iterator[Check]:
    for k in range(0, 7):
        yield Check(f"omega h_{k}", omega(double_h(k)), _neg_iota(double_e(k)))


def suite_double_combinatorial(cfg: VerifyConfig) -> Iterator[Check]:
    """Index-chain sums against the expansions in classical functions."""
    for n in range(0, 4):
        for k in range(0, 5):
            for s in (-1, 0, 1):
                yield Check(f"h_{k} n={n} s={s}", double_h_combinatorial(k, n, s), double_h(k, n, s))
                yield Check(f"e_{k} n={n} s={s}", double_e_combinatorial(k, n, s), double_e(k, n, s))


def suite_single_alpha(cfg: VerifyConfig) -> Iterator[Check]:
    """All ``α_i`` equal: the double functions are classical ones in shifted variables."""
    a = alpha(0)
    for n in range(1, 4):
        shift = {Var(Kind.X, i): xvar(i) - a for i in range(1, n + 1)}
        shift.update({Var(Kind.Y, i): yvar(i) + a for i in range(1, n + 1)})
        for k in range(0, 6):
            for kind, fn in (("h", double_h), ("e", double_e)):
                val = fn(k, n)
                collapsed = val.map_vars(lambda v: a if v.kind == Kind.ALPHA else None)
                yield Check(
                    f"{kind}_{k} n={n}", collapsed, classical_super(kind, k, n).map_vars(shift.get)
                )


# -- Schur functions -------------------------------------------------------------


def suite_schur(cfg: VerifyConfig) -> Iterator[Check]:
    """Jacobi–Trudi (both bases) against A-tableaux, plus stability checks."""
    for lam in partitions_up_to(cfg.size(5)):
        for mu in subpartitions(lam):
            sh = SkewShape(lam, mu)
            for n in range(0, 4):
                jh = schur_double_jt(sh, n, "h")
                yield Check(f"JT-h vs JT-e {sh} n={n}", jh, schur_double_jt(sh, n, "e"))
                yield Check(f"JT-h vs tableaux {sh} n={n}", jh, schur_double_tableaux(sh, n))
            gh = schur_double_jt(sh, GENERIC, "h")
            ge = schur_double_jt(sh, GENERIC, "e")
            yield Check(f"generic JT-h vs JT-e {sh}", gh, ge)
            for extra in (1, 2):
                yield Check(
                    f"ell-stability h {sh} +{extra}",
                    schur_double_jt(sh, GENERIC, "h", len(lam) + extra),
                    gh,
                )
                yield Check(
                    f"ell-stability e {sh} +{extra}",
                    schur_double_jt(sh, GENERIC, "e", (lam[0] if lam else 0) + extra),
                    ge,
                )
    # dropping the last pair of variables
    for lam in partitions_up_to(cfg.size(4)):
        for n in range(1, 4):
            drop = {Var(Kind.X, n): 0, Var(Kind.Y, n): 0}
            yield Check(
                f"variable stability {lam} n={n}",
                specialize(schur_double_jt(lam, n), drop),
                schur_double_jt(lam, n - 1),
            )


def suite_bialternant(cfg: VerifyConfig) -> Iterator[Check]:
    for lam in partitions_up_to(cfg.size(4)):
        for n in range(max(1, len(lam)), 4):
            b = bialternant(lam, n)
            yield Check(f"bialternant vs JT {lam} n={n}", b, factorial_schur_jt(lam, n))
            ys = {Var(Kind.Y, i): 0 for i in range(1, n + 1)}
            yield Check(
                f"alpha=0 {lam} n={n}",
                zero_alpha(b),
                specialize(schur_classical(lam, n), ys),
            )


# -- expansions -----------------------------------------------------------------


def _degree_filtration(exp: SchurExpansion, degree: Callable[[Partition], int], label: str):
    for mu, c in exp.items():
        d = degree(mu)
        yield Check(f"{label}: coefficient of s[{mu}] homogeneous of degree {d}", c.is_homogeneous(d), True)


def suite_mn(cfg: VerifyConfig) -> Iterator[Check]:
    """``p_k s_λ`` expansions as exact identities, with the degree filtration."""
    for lam in partitions_up_to(cfg.size(5)):
        s_lam = schur_any(lam)
        for k in range(1, 5):
            exp = mn_multiply(lam, k)
            yield Check(f"p_{k} s[{lam}]", powersum_super(k) * s_lam, exp.evaluate(schur_any))
            yield from _degree_filtration(exp, lambda mu: lam.size + k - mu.size, f"p_{k} s[{lam}]")
            der = mn_derivative(lam, k)
            yield from _degree_filtration(
                der, lambda mu: lam.size - k - mu.size, f"{k} d s[{lam}]/dp_{k}"
            )


def suite_pieri(cfg: VerifyConfig) -> Iterator[Check]:
    """Closed form, residue and direct multiplication agree; dual rule directly."""
    for mu in partitions_up_to(cfg.size(5)):
        s_mu = schur_any(mu)
        for k in range(0, 5):
            exp = pieri_h_expansion(mu, k)
            for lam, c in exp.items():
                yield Check(
                    f"closed vs residue mu={mu} lam={lam} k={k}",
                    c,
                    pieri_h_coeff(mu, lam, k, method="residue"),
                )
                top = lam[0] if lam else 0
                yield Check(
                    f"ell-stability mu={mu} lam={lam} k={k}",
                    pieri_h_coeff(mu, lam, k, ell=top + 2),
                    c,
                )
            yield Check(f"h_{k} s[{mu}]", double_h(k) * s_mu, exp.evaluate(schur_any))
    for mu in partitions_up_to(cfg.size(4)):
        s_mu = schur_any(mu)
        for k in range(0, 4):
            exp = pieri_e_expansion(mu, k)
            yield Check(f"e_{k} s[{mu}]", double_e(k) * s_mu, exp.evaluate(schur_any))


def suite_skew_pieri(cfg: VerifyConfig) -> Iterator[Check]:
    """Straight-shape reduction and the direct check in three variable pairs."""
    n = 3
    for mu in partitions_up_to(cfg.size(4)):
        for k in range(0, 3):
            straight_h = {lam: c for (lam, eta), c in skew_pieri_expansion(mu, (), k, "h").items()}
            yield Check(f"h reduction mu={mu} k={k}", SchurExpansion(straight_h), pieri_h_expansion(mu, k))
            straight_e = {lam: c for (lam, eta), c in skew_pieri_expansion(mu, (), k, "e").items()}
            sign = -1 if k % 2 else 1
            yield Check(
                f"e reduction mu={mu} k={k}",
                SchurExpansion(straight_e) * sign,
                pieri_e_expansion(mu, k),
            )
            for nu in subpartitions(mu):
                s_skew = schur_any(SkewShape(mu, nu), n)
                for kind in ("h", "e"):
                    if kind == "h":
                        lhs = double_h(k, n) * s_skew
                    else:
                        lhs = double_e(k, n) * s_skew * sign
                    rhs = Poly.const(0)
                    for (lam, eta), c in skew_pieri_expansion(mu, nu, k, kind).items():
                        rhs = rhs + c * schur_any(SkewShape(lam, eta), n)
                    yield Check(f"{kind}_{k} s[{mu}/{nu}] n={n}", lhs, rhs)


def suite_raising(cfg: VerifyConfig) -> Iterator[Check]:
    for lam in partitions_up_to(cfg.size(6), max_length=3):
        yield Check(f"raising {lam}", hsymbol_evaluate(raising_expansion(lam)), schur_double_jt(lam))


# -- negative controls --------------------------------------------------------------


def _ribbon_oracle(lam: Partition, k: int) -> dict[Partition, Poly]:
    """Expected ``J_k|λ⟩`` from ribbon enumeration and particle positions."""
    window = (-len(lam) - abs(k) - 2, (lam[0] if lam else 0) + abs(k) + 2)
    pos = maya_positions((lam, 0), window)
    out: dict[Partition, Poly] = {}
    if k > 0:
        for mu in subpartitions(lam):
            ht = ribbon_height(lam, mu)
            if ht is None or lam.size - mu.size < k:
                continue
            new = maya_positions((mu, 0), window)
            (j,) = pos - new
            (i,) = new - pos
            out[mu] = current_entry(i, j, k) * (-1 if ht % 2 else 1)
        return out
    d = -k
    for size in range(1, d + 1):
        for mu in partitions_of(lam.size + size):
            if not mu.contains(lam):
                continue
            ht = ribbon_height(mu, lam)
            if ht is None:
                continue
            new = maya_positions((mu, 0), window)
            (j,) = pos - new
            (i,) = new - pos
            out[mu] = current_entry(i, j, k) * (-1 if ht % 2 else 1)
    diag = Poly.const(0)
    for p in range(window[0], window[1] + 1):
        if p > 0 and p in pos:
            diag = diag + alpha(p) ** d
        elif p <= 0 and p not in pos:
            diag = diag - alpha(p) ** d
    out[lam] = diag
    return {m: c for m, c in out.items() if c}


def suite_ribbons(cfg: VerifyConfig) -> Iterator[Check]:
    """Current action against an independent ribbon enumeration."""
    for lam in partitions_up_to(cfg.size(8)):
        for k in range(1, 5):
            got = SchurExpansion(
                {key.partition: c for key, c in apply_current(k, ket(lam)).items()}
            )
            yield Check(f"J_{k}|{lam}>", got, SchurExpansion(_ribbon_oracle(lam, k)))
            yield Check(f"J_{k}|{lam}> support", got.support(), set(_ribbon_oracle(lam, k)))
    for lam in partitions_up_to(cfg.size(5)):
        for k in range(1, 5):
            got = SchurExpansion(
                {key.partition: c for key, c in apply_current(-k, ket(lam)).items()}
            )
            yield Check(f"J_-{k}|{lam}>", got, SchurExpansion(_ribbon_oracle(lam, -k)))


def suite_pieri_zero(cfg: VerifyConfig) -> Iterator[Check]:
    """Vanishing of Pieri coefficients outside strips of admissible size."""
    size = cfg.size(4)
    for mu in partitions_up_to(size):
        for k in range(0, 4):
            for lam in partitions_up_to(size + k + 1):
                strip_h = is_horizontal_strip(lam, mu) and lam.size - mu.size <= k
                if not strip_h:
                    yield Check(f"h: mu={mu} lam={lam} k={k}", pieri_h_coeff(mu, lam, k), Poly.const(0))
                    yield Check(
                        f"h residue: mu={mu} lam={lam} k={k}",
                        pieri_h_coeff(mu, lam, k, method="residue"),
                        Poly.const(0),
                    )
                strip_e = is_vertical_strip(lam, mu) and lam.size - mu.size <= k
                if not strip_e:
                    yield Check(f"e: mu={mu} lam={lam} k={k}", pieri_e_coeff(mu, lam, k), Poly.const(0))
                if not strip_h:
                    yield Check(
                        f"skew h: mu={mu} lam={lam} k={k}",
                        skew_pieri_coeff((lam, ()), (mu, ()), k, "h"),
                        Poly.const(0),
                    )


# -- values printed in worked examples ---------------------------------------------------


def _ket_sum(pairs: dict[tuple[int, ...], Poly]) -> FockVector:
    acc = FockVector()
    for lam, c in pairs.items():
        acc = acc + ket(lam, 0, c)
    return acc


def _ea(k: int, lo: int, hi: int) -> Poly:
    """``e_k(-α_lo, …, -α_hi)``."""
    return e_alpha(k, lo, hi, -1)


def suite_golden(cfg: VerifyConfig) -> Iterator[Check]:
    a = alpha
    x1, y1, x2, y2 = xvar(1), yvar(1), xvar(2), yvar(2)
    yield Check("h_2 one pair", double_h(2, 1), x1 * x1 + x1 * y1 - a(1) * (x1 + y1))
    yield Check(
        "h_2 one pair regrouped",
        double_h(2, 1),
        (x1 - a(0)) * (x1 - a(1)) + (y1 + a(0)) * (x1 - a(1)),
    )
    yield Check(
        "h_2 two pairs",
        double_h(2, 2),
        (x2 - a(-1)) * (x2 - a(0))
        + (x2 - a(-1)) * (x1 - a(1))
        + (x1 - a(0)) * (x1 - a(1))
        + ((y1 + a(0)) + (y2 + a(-1))) * ((x2 - a(0)) + (x1 - a(1)))
        + (y1 + a(0)) * (y2 + a(0)),
    )
    yield Check("e_2 one pair", double_e(2, 1), x1 * y1 + y1 * y1 + a(0) * (x1 + y1))
    yield Check(
        "e_3 one pair",
        double_e(3, 1),
        x1 * y1 * y1
        + y1 ** 3
        + (a(-1) + a(0)) * (x1 * y1 + y1 * y1)
        + a(-1) * a(0) * (x1 + y1),
    )
    yield Check(
        "s_22/1 classical expansion",
        classical_schur_expansion(schur_double_jt(SkewShape((2, 2), (1,)))),
        SchurExpansion({(2, 1): 1, (2,): a(1), (1, 1): -a(0), (1,): -a(0) * a(1)}),
    )
    yield Check(
        "s_22/1 one pair",
        schur_double_jt(SkewShape((2, 2), (1,)), 1),
        (x1 + y1) * (x1 - a(0)) * (y1 + a(1)),
    )
    A = current_entry
    lam = (8, 3, 1)
    yield Check(
        "J_3 |831>",
        apply_current(3, ket(lam)),
        _ket_sum(
            {
                (5, 3, 1): A(5, 8, 3),
                (4, 3, 1): A(4, 8, 3),
                (3, 3, 1): A(3, 8, 3),
                (2, 2, 1): -A(1, 8, 3),
                (2, 1, 1): -A(0, 8, 3),
                (2,): A(-2, 8, 3),
                (8,): -A(-2, 2, 3),
            }
        ),
    )
    diag = a(8) ** 3 + a(2) ** 3 - a(0) ** 3 - a(-2) ** 3
    yield Check(
        "J_-3 |831>",
        apply_current(-3, ket(lam)),
        _ket_sum(
            {
                (11, 3, 1): A(11, 8, -3),
                (10, 3, 1): A(10, 8, -3),
                (9, 3, 1): A(9, 8, -3),
                (8, 6, 1): A(5, 2, -3),
                (8, 5, 1): A(4, 2, -3),
                (8, 4, 1): A(3, 2, -3),
                (8, 3, 3): A(1, -1, -3),
                (8, 3, 2): A(0, -1, -3),
                (8, 3, 2, 2): -A(0, -3, -3),
                (8, 3, 1, 1): A(-2, -3, -3),
                (8, 3, 1, 1, 1): -A(-2, -4, -3),
                (8, 3, 1, 1, 1, 1): A(-2, -5, -3),
                lam: diag,
            }
        ),
    )
    h2 = lambda i, j: a(i) ** 2 + a(i) * a(j) + a(j) ** 2  # noqa: E731
    yield Check(
        "p_3 s_831",
        mn_multiply(lam, 3),
        SchurExpansion(
            {
                (11, 3, 1): 1,
                (10, 3, 1): a(8) + a(9) + a(10),
                (9, 3, 1): h2(8, 9),
                (8, 6, 1): 1,
                (8, 5, 1): a(2) + a(3) + a(4),
                (8, 4, 1): h2(2, 3),
                (8, 3, 3): a(-1) + a(0) + a(1),
                (8, 3, 2): h2(-1, 0),
                (8, 3, 2, 2): -1,
                (8, 3, 1, 1): h2(-3, -2),
                (8, 3, 1, 1, 1): -(a(-4) + a(-3) + a(-2)),
                (8, 3, 1, 1, 1, 1): 1,
                lam: diag,
            }
        ),
    )
    yield Check(
        "3 d s_831 / dp_3",
        mn_derivative(lam, 3),
        SchurExpansion(
            {
                (5, 3, 1): 1,
                (4, 3, 1): _ea(1, 5, 7),
                (3, 3, 1): _ea(2, 4, 7),
                (2, 2, 1): -_ea(4, 2, 7),
                (2, 1, 1): -_ea(5, 1, 7),
                (2,): _ea(7, -1, 7),
                (8,): -_ea(1, -1, 1),
            }
        ),
    )
    yield Check(
        "J_-2 |vacuum>",
        apply_current(-2, ket()),
        _ket_sum({(2,): _one(), (1, 1): Poly.const(-1), (1,): a(0) + a(1)}),
    )
    yield Check(
        "h_2 s_522",
        pieri_h_expansion((5, 2, 2), 2),
        SchurExpansion(
            {
                (7, 2, 2): 1,
                (6, 3, 2): 1,
                (6, 2, 2, 1): 1,
                (5, 4, 2): 1,
                (5, 3, 2, 1): 1,
                (5, 2, 2, 2): 1,
                (6, 2, 2): a(5) + a(6) - a(-1) - a(-2),
                (5, 3, 2): a(2) + a(5) - a(-1) - a(-2),
                (5, 2, 2, 1): a(5) - a(-1),
                (5, 2, 2): (a(5) - a(-1)) * (a(5) - a(-2)),
            }
        ),
    )
    c = (a(4) - a(0)) * (a(4) - a(1))
    yield Check("c_4,43^441 closed", pieri_h_coeff((4, 3), (4, 4, 1), 4), c)
    yield Check("c_4,43^441 residue", pieri_h_coeff((4, 3), (4, 4, 1), 4, method="residue"), c)


SUITES: dict[str, Suite] = {
    "golden": suite_golden,
    "shifted_cob": suite_shifted_cob,
    "basis_roundtrip": suite_basis_roundtrip,
    "shifted_action": suite_shifted_action,
    "orthonormality": suite_orthonormality,
    "cocyclecase": suite_cocyclecase,
    "heidentity": suite_heidentity,
    "product_cob": suite_product_cob,
    "currents": suite_currents,
    "heisenberg": suite_heisenberg,
    "vacuum": suite_vacuum,
    "double_gf": suite_double_gf,
    "eh_roundtrip": suite_eh_roundtrip,
    "shift_eh": suite_shift_eh,
    "omega": suite_omega,
    "double_combinatorial": suite_double_combinatorial,
    "single_alpha": suite_single_alpha,
    "schur": suite_schur,
    "bialternant": suite_bialternant,
    "mn": suite_mn,
    "pieri": suite_pieri,
    "skew_pieri": suite_skew_pieri,
    "raising": suite_raising,
    "ribbons": suite_ribbons,
    "pieri_zero": suite_pieri_zero,
}


def run_suite(name: str, cfg: VerifyConfig | None = None) -> SuiteResult:
    """Run one named suite, stopping at the first failing check."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    cfg = cfg or VerifyConfig()
    start = time.perf_counter()
    cases = 0
    for check in SUITES[name](cfg):
        cases += 1
        if not check.holds():
            return SuiteResult(name, False, cases, time.perf_counter() - start, check)
    return SuiteResult(name, True, cases, time.perf_counter() - start)


def run_suites(names: list[str] | None = None, cfg: VerifyConfig | None = None) -> list[SuiteResult]:
    return [run_suite(n, cfg) for n in (names or list(SUITES))]
