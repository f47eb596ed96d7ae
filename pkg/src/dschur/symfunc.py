"""Double supersymmetric functions and double Schur functions.

A :class:`SuperContext` fixes the alphabet.  With ``n`` an integer the
functions are polynomials in ``x_1..x_n, y_1..y_n`` and the ``α``.  With
``n=None`` the classical supersymmetric complete functions ``h_m(x/y)`` are
kept as free generators (``hvar(m)``), which is the unbounded-alphabet ring
in which identities between symmetric functions are checked.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .laurent import LaurentSeries, shifted_power
from .partitions import Partition
from .polyring import Kind, Poly, Var, alpha, e_alpha, elem_sym, homog_sym, hvar, xvar, yvar

__all__ = [
    "SuperContext",
    "GENERIC",
    "SkewShape",
    "powersum_super",
    "classical_super",
    "double_h",
    "double_e",
    "double_h_combinatorial",
    "double_e_combinatorial",
    "schur_double_jt",
    "schur_double_tableaux",
    "schur_classical",
    "factorial_h",
    "bialternant",
    "determinant",
    "omega",
    "factorial_schur_jt",
    "zero_alpha",
]


@dataclass(frozen=True)
class SuperContext:
    """``n`` pairs of variables ``x_i/y_i``, or ``None`` for the generic ring."""

    n: int | None = None

    def __post_init__(self) -> None:
        if self.n is not None and (not isinstance(self.n, int) or self.n < 0):
            raise ValueError(f"number of variables must be a non-negative int, got {self.n!r}")

    @property
    def generic(self) -> bool:
        return self.n is None

    def finite(self) -> int:
        if self.n is None:
            raise ValueError("this operation needs a finite number of variables")
        return self.n


GENERIC = SuperContext(None)


def _ctx(ctx: SuperContext | int | None) -> SuperContext:
    return ctx if isinstance(ctx, SuperContext) else SuperContext(ctx)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @classmethod
    def of(cls, shape: SkewShape | Iterable[int] | tuple) -> SkewShape:
        if isinstance(shape, SkewShape):
            return shape
        return cls(Partition(shape))

    def conjugate(self) -> SkewShape:
        return SkewShape(self.outer.conjugate(), self.inner.conjugate())

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}" if self.inner else str(self.outer)


# -- classical supersymmetric functions ------------------------------------


@lru_cache(maxsize=None)
def _classical(kind: str, k: int, n: int | None) -> Poly:
    if k < 0:
        return Poly.const(0)
    if k == 0:
        return Poly.const(1)
    if n is None:
        if kind == "h":
            return hvar(k)
        if kind == "e":
            # Σ_{i} (-1)^i e_{k-i} h_i = 0
            acc = Poly.const(0)
            for i in range(1, k + 1):
                term = hvar(i) * _classical("e", k - i, None)
                acc = acc + term if i % 2 else acc - term
            return acc
        if kind == "p":
            acc = hvar(k).scale(k)
            for i in range(1, k):
                acc = acc - _classical("p", i, None) * hvar(k - i)
            return acc
        raise ValueError(kind)
    xs = [Var(Kind.X, i) for i in range(1, n + 1)]
    ys = [Var(Kind.Y, i) for i in range(1, n + 1)]
    if kind == "p":
        acc = Poly.const(0)
        for i in range(1, n + 1):
            acc = acc + xvar(i) ** k - (-yvar(i)) ** k
        return acc
    if kind == "h":
        return sum((homog_sym(xs, a) * elem_sym(ys, k - a) for a in range(k + 1)), Poly.const(0))
    if kind == "e":
        return sum((elem_sym(xs, a) * homog_sym(ys, k - a) for a in range(k + 1)), Poly.const(0))
    raise ValueError(kind)


def powersum_super(k: int, ctx: SuperContext | int | None = GENERIC) -> Poly:
    """``p_k(x/y) = Σ x_i^k - (-y_i)^k``."""
    if k < 1:
        raise ValueError("power sums need k >= 1")
    return _classical("p", k, _ctx(ctx).n)


def classical_super(kind: str, k: int, ctx: SuperContext | int | None = GENERIC) -> Poly:
    """Classical supersymmetric ``h_k(x/y)`` or ``e_k(x/y)``."""
    if kind not in ("h", "e"):
        raise ValueError(f"kind must be 'h' or 'e', got {kind!r}")
    return _classical(kind, k, _ctx(ctx).n)


# -- double h and e -----------------------------------------------------------


@lru_cache(maxsize=None)
def _double(kind: str, k: int, n: int | None, s: int) -> Poly:
    if k < 0:
        return Poly.const(0)
    if k == 0:
        return Poly.const(1)
    acc = Poly.const(0)
    for m in range(1, k + 1):
        if kind == "h":
            coeff = e_alpha(k - m, 1 + s, k - 1 + s, -1)
        else:
            coeff = e_alpha(k - m, 2 - k + s, s, 1)
        if coeff:
            acc = acc + coeff * _classical(kind, m, n)
    return acc


def double_h(k: int, ctx: SuperContext | int | None = GENERIC, s: int = 0) -> Poly:
    """``h_k(x/y‖σ^s α) = Σ_m e_{k-m}(-α_{s+1}, …, -α_{s+k-1}) h_m(x/y)``."""
    return _double("h", k, _ctx(ctx).n, s)


def double_e(k: int, ctx: SuperContext | int | None = GENERIC, s: int = 0) -> Poly:
    """``e_k(x/y‖σ^s α) = Σ_m e_{k-m}(α_{s+2-k}, …, α_s) e_m(x/y)``."""
    return _double("e", k, _ctx(ctx).n, s)


def double_h_combinatorial(k: int, ctx: SuperContext | int, s: int = 0) -> Poly:
    """Sum over chains ``i_1 >= … >= i_b`` and ``j_1 < … < j_a`` (``a + b = k``)."""
    n = _ctx(ctx).finite()
    total = Poly.const(0)
    for a in range(k + 1):
        b = k - a
        for js in itertools.combinations(range(1, n + 1), a):
            yw = Poly.const(1)
            for r, j in enumerate(js, 1):
                yw = yw * (yvar(j) + alpha(r - j + s))
            for is_ in itertools.combinations_with_replacement(range(n, 0, -1), b):
                w = yw
                for r, i in enumerate(is_, 1):
                    w = w * (xvar(i) - alpha(a + r - i + s))
                total = total + w
    return total


def double_e_combinatorial(k: int, ctx: SuperContext | int, s: int = 0) -> Poly:
    """Sum over chains ``i_1 > … > i_b`` and ``j_1 <= … <= j_a`` (``a + b = k``)."""
    n = _ctx(ctx).finite()
    total = Poly.const(0)
    for a in range(k + 1):
        b = k - a
        for js in itertools.combinations_with_replacement(range(1, n + 1), a):
            yw = Poly.const(1)
            for r, j in enumerate(js, 1):
                yw = yw * (yvar(j) + alpha(2 - r - j + s))
            for is_ in itertools.combinations(range(n, 0, -1), b):
                w = yw
                for r, i in enumerate(is_, 1):
                    w = w * (xvar(i) - alpha(2 - a - r - i + s))
                total = total + w
    return total


# -- determinants ---------------------------------------------------------------


def determinant(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Laplace expansion along rows, memoized on the set of used columns."""
    size = len(matrix)
    if size == 0:
        return Poly.const(1)
    memo: dict[int, Poly] = {}

    def minor(row: int, used: int) -> Poly:
        if row == size:
            return Poly.const(1)
        got = memo.get(used)
        if got is not None:
            return got
        acc = Poly.const(0)
        sign_skip = 0
        for col in range(size):
            if used >> col & 1:
                continue
            entry = matrix[row][col]
            if entry:
                sub = minor(row + 1, used | (1 << col))
                if sub:
                    term = entry * sub
                    acc = acc - term if sign_skip % 2 else acc + term
            sign_skip += 1
        memo[used] = acc
        return acc

    return minor(0, 0)


def _padded(p: Partition, ell: int) -> list[int]:
    return list(p) + [0] * (ell - len(p))


@lru_cache(maxsize=None)
def _jt(outer: Partition, inner: Partition, n: int | None, basis: str, ell: int) -> Poly:
    if basis == "h":
        lam, mu = _padded(outer, ell), _padded(inner, ell)
        entry = lambda k, s: _double("h", k, n, s)  # noqa: E731
        shift = lambda j: mu[j - 1] - j + 1  # noqa: E731
    else:
        lam, mu = _padded(outer.conjugate(), ell), _padded(inner.conjugate(), ell)
        entry = lambda k, s: _double("e", k, n, s)  # noqa: E731
        shift = lambda j: j - mu[j - 1] - 1  # noqa: E731
    mat = [
        [entry(lam[i - 1] - mu[j - 1] - i + j, shift(j)) for j in range(1, ell + 1)]
        for i in range(1, ell + 1)
    ]
    return determinant(mat)


def schur_double_jt(
    shape: SkewShape | Iterable[int],
    ctx: SuperContext | int | None = GENERIC,
    basis: str = "h",
    ell: int | None = None,
) -> Poly:
    """Double (skew) Schur function by the Jacobi–Trudi determinant.

    ``basis="h"`` uses ``h_{λ_i-μ_j-i+j}(σ^{μ_j-j+1}α)`` and needs
    ``ell >= ℓ(λ)``; ``basis="e"`` uses ``e_{λ'_i-μ'_j-i+j}(σ^{j-μ'_j-1}α)``
    and needs ``ell >= λ_1``.
    """
    sh = SkewShape.of(shape)
    if basis not in ("h", "e"):
        raise ValueError(f"basis must be 'h' or 'e', got {basis!r}")
    need = len(sh.outer) if basis == "h" else (sh.outer[0] if sh.outer else 0)
    if ell is None:
        ell = need
    if ell < need:
        raise ValueError(f"ell={ell} is too small for {sh} in the {basis}-basis (need {need})")
    return _jt(sh.outer, sh.inner, _ctx(ctx).n, basis, ell)


def zero_alpha(p: Poly) -> Poly:
    """Specialize every ``α_i`` to 0."""
    return p.map_vars(lambda v: 0 if v.kind == Kind.ALPHA else None)


def schur_classical(shape: SkewShape | Iterable[int], ctx: SuperContext | int | None = GENERIC) -> Poly:
    """Classical supersymmetric (skew) Schur function."""
    return zero_alpha(schur_double_jt(shape, ctx, "h"))


def omega(p: Poly) -> Poly:
    """``h_m -> e_m`` on generic classical generators; α untouched."""
    return p.map_vars(lambda v: _classical("e", v.index, None) if v.kind == Kind.H else None)


# -- A-tableaux ---------------------------------------------------------------


def schur_double_tableaux(shape: SkewShape | Iterable[int], ctx: SuperContext | int) -> Poly:
    """Sum of A-tableau weights over the alphabet ``1' < 1 < 2' < 2 < …``.

    Letter ``t`` encodes ``i = t // 2 + 1``, primed when ``t`` is even.
    Rows and columns weakly increase; a primed letter repeats in no row and
    an unprimed letter repeats in no column.  Cell ``(r, c)`` has content
    ``c - r`` and weight ``x_i - α_{c-r}`` or ``y_i + α_{c-r}``.
    """
    sh = SkewShape.of(shape)
    n = _ctx(ctx).finite()
    cells = [(r, c) for r, c in sh.outer.cells() if c > sh.inner.part(r)]
    letters = range(2 * n)
    weight = {
        (t, cont): (yvar(t // 2 + 1) + alpha(cont)) if t % 2 == 0 else (xvar(t // 2 + 1) - alpha(cont))
        for t in letters
        for cont in {c - r for r, c in cells}
    }
    filling: dict[tuple[int, int], int] = {}

    def rec(idx: int, acc: Poly) -> Poly:
        if idx == len(cells):
            return acc
        r, c = cells[idx]
        left = filling.get((r, c - 1))
        up = filling.get((r - 1, c))
        lo = 0
        if left is not None:
            lo = max(lo, left + 1 if left % 2 == 0 else left)
        if up is not None:
            lo = max(lo, up + 1 if up % 2 == 1 else up)
        total = Poly.const(0)
        for t in range(lo, 2 * n):
            filling[(r, c)] = t
            total = total + rec(idx + 1, acc * weight[(t, c - r)])
        filling.pop((r, c), None)
        return total

    return rec(0, Poly.const(1))


# -- factorial specialization ---------------------------------------------------


@lru_cache(maxsize=None)
def factorial_h(k: int, n: int, s: int = 0) -> Poly:
    """Coefficient of ``1/(z⁻¹|σ^{n+s}α)^k`` in ``∏_{i<=n} (1 - α_i z)/(1 - x_i z)``.

    This is ``h_k`` with ``y_i = -α_i`` in the basis shifted by ``σ^n``, so
    its Jacobi–Trudi determinant is the factorial Schur polynomial
    ``s_λ(x_1..x_n | α)`` with ``(x|α)^m = ∏_{u<=m} (x - α_u)``.
    """
    if k < 0:
        return Poly.const(0)
    # basis element 1/(z⁻¹|β)^k = (z⁻¹|σ^k β)^{-k}; peel from the top in z-degree
    series = LaurentSeries(0, [1], k)
    for i in range(1, n + 1):
        num = LaurentSeries(0, [1, -alpha(i)], None)
        geo = [Poly.const(1)]
        for _ in range(k):
            geo.append(geo[-1] * xvar(i))
        series = series * num * LaurentSeries(0, geo, k)
    shift = n + s
    rest = series
    coeff = Poly.const(0)
    for m in range(k + 1):
        c = rest[m]
        if m == k:
            coeff = c
            break
        if c:
            rest = rest - shifted_power(-m, shift + m, k) * c
    return coeff


def _rising(x: Poly, m: int, t: int = 0) -> Poly:
    """``(x|σ^t α)^m = ∏_{u=1}^{m} (x - α_{t+u})``."""
    acc = Poly.const(1)
    for u in range(1, m + 1):
        acc = acc * (x - alpha(t + u))
    return acc


def bialternant(lam: Iterable[int], n: int) -> Poly:
    """``A_{λ+δ} / A_δ`` with ``A_μ = det[(x_i|α)^{μ_j}]`` over ``n`` variables."""
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    lp = lam.padded(n)
    delta = [n - j for j in range(1, n + 1)]
    num = determinant([[_rising(xvar(i), lp[j] + delta[j]) for j in range(n)] for i in range(1, n + 1)])
    den = determinant([[_rising(xvar(i), delta[j]) for j in range(n)] for i in range(1, n + 1)])
    return num.divide_exact(den)


def factorial_schur_jt(lam: Iterable[int], n: int) -> Poly:
    """Jacobi–Trudi determinant with :func:`factorial_h` entries."""
    lam = Partition(lam)
    ell = len(lam)
    lp = lam.padded(ell)
    return determinant(
        [[factorial_h(lp[i] - i + j, n, 1 - (j + 1)) for j in range(ell)] for i in range(ell)]
    )
