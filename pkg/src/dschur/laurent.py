"""Formal Laurent series in ``z`` with polynomial coefficients.

A series is known exactly up to and including ``z^order``; ``order=None``
marks an exact Laurent polynomial.  The shifted powers

    (z⁻¹|σ^s α)^k = ∏_{i=1}^{k} (z⁻¹ - α_{i+s})            (k >= 0)
    (z⁻¹|σ^s α)^k = ∏_{i=k+1}^{0} (z⁻¹ - α_{i+s})⁻¹        (k < 0)

form a triangular basis, used for change of basis and residues.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from functools import lru_cache

from .polyring import Poly, PolyLike, alpha

__all__ = [
    "PrecisionError",
    "LaurentSeries",
    "DEFAULT_ORDER",
    "series_arith",
    "invert_unit",
    "shifted_power",
    "to_shifted_basis",
    "from_shifted_basis",
    "residue",
    "z",
]

DEFAULT_ORDER = 10


class PrecisionError(ValueError):
    """A coefficient beyond the known truncation order was requested."""


def _min_order(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class LaurentSeries:
    """Immutable truncated Laurent series ``Σ_{n>=v} c_n z^n + O(z^{order+1})``."""

    __slots__ = ("valuation", "coeffs", "order")

    def __init__(
        self, valuation: int, coeffs: Iterable[PolyLike], order: int | None = DEFAULT_ORDER
    ) -> None:
        cs = [Poly.coerce(c) for c in coeffs]
        if order is not None:
            cs = cs[: max(0, order - valuation + 1)]
        lead = 0
        while lead < len(cs) and cs[lead].is_zero():
            lead += 1
        cs = cs[lead:]
        valuation += lead
        while cs and cs[-1].is_zero():
            cs.pop()
        if not cs:
            valuation = 0 if order is None else order + 1
        self.valuation: int = valuation
        self.coeffs: tuple[Poly, ...] = tuple(cs)
        self.order: int | None = order

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_dict(cls, terms: Mapping[int, PolyLike], order: int | None = None) -> LaurentSeries:
        if not terms:
            return cls(0, [], order)
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(n, 0) for n in range(lo, hi + 1)], order)

    @classmethod
    def monomial(cls, n: int, c: PolyLike = 1, order: int | None = None) -> LaurentSeries:
        return cls(n, [c], order)

    @classmethod
    def zero(cls, order: int | None = None) -> LaurentSeries:
        return cls(0, [], order)

    # -- inspection -------------------------------------------------------

    def is_exact(self) -> bool:
        return self.order is None

    def is_zero(self) -> bool:
        return not self.coeffs

    def top(self) -> int:
        """Index of the last stored coefficient (``valuation - 1`` when zero)."""
        return self.valuation + len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Poly:
        if self.order is not None and n > self.order:
            raise PrecisionError("insufficient precision")
        i = n - self.valuation
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Poly.const(0)

    def items(self) -> list[tuple[int, Poly]]:
        return [(self.valuation + i, c) for i, c in enumerate(self.coeffs) if c]

    def truncate(self, order: int | None) -> LaurentSeries:
        return LaurentSeries(self.valuation, self.coeffs, _min_order(self.order, order))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: LaurentSeries | PolyLike) -> LaurentSeries:
        o = _coerce(other)
        order = _min_order(self.order, o.order)
        terms: dict[int, Poly] = {}
        for s in (self, o):
            for n, c in s.items():
                if order is None or n <= order:
                    terms[n] = terms[n] + c if n in terms else c
        return LaurentSeries.from_dict(terms, order)

    __radd__ = __add__

    def __neg__(self) -> LaurentSeries:
        return LaurentSeries(self.valuation, [-c for c in self.coeffs], self.order)

    def __sub__(self, other: LaurentSeries | PolyLike) -> LaurentSeries:
        return self + (-_coerce(other))

    def __rsub__(self, other: PolyLike) -> LaurentSeries:
        return _coerce(other) - self

    def __mul__(self, other: LaurentSeries | PolyLike) -> LaurentSeries:
        o = _coerce(other)
        if o.order is None and len(o.coeffs) == 1 and o.valuation == 0:
            c = o.coeffs[0]
            return LaurentSeries(self.valuation, [c * a for a in self.coeffs], self.order)
        # relative precision of each factor bounds the product's precision
        order = None
        if self.order is not None:
            order = self.order + o.valuation
        if o.order is not None:
            cand = o.order + self.valuation
            order = cand if order is None else min(order, cand)
        if not self.coeffs or not o.coeffs:
            return LaurentSeries.zero(order)
        v = self.valuation + o.valuation
        hi = self.top() + o.top()
        if order is not None:
            hi = min(hi, order)
        out = [Poly.const(0)] * max(0, hi - v + 1)
        for i, a in enumerate(self.coeffs):
            if v + i > hi:
                break
            for j, b in enumerate(o.coeffs):
                n = i + j
                if v + n > hi:
                    break
                out[n] = out[n] + a * b
        return LaurentSeries(v, out, order)

    __rmul__ = __mul__

    def shift(self, m: int) -> LaurentSeries:
        """Multiply by ``z^m``."""
        return LaurentSeries(
            self.valuation + m, self.coeffs, None if self.order is None else self.order + m
        )

    def map_coeffs(self, f) -> LaurentSeries:
        return LaurentSeries(self.valuation, [f(c) for c in self.coeffs], self.order)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Poly)):
            other = _coerce(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.order == other.order and self.items() == other.items()

    def agrees_with(self, other: LaurentSeries | PolyLike, order: int | None = None) -> bool:
        """Equality up to the common precision (and ``order`` if given)."""
        o = _coerce(other)
        bound = _min_order(_min_order(self.order, o.order), order)
        diff = (self - o).truncate(bound)
        return diff.is_zero()

    def __hash__(self) -> int:
        return hash((self.valuation, self.coeffs, self.order))

    # -- rendering --------------------------------------------------------

    def __str__(self) -> str:
        parts = []
        for n, c in self.items():
            zpart = "" if n == 0 else ("z" if n == 1 else f"z^{n}")
            cs = str(c)
            if zpart and cs == "1":
                parts.append(zpart)
            elif zpart and cs == "-1":
                parts.append(f"-{zpart}")
            elif zpart:
                parts.append(f"({cs})*{zpart}")
            else:
                parts.append(f"({cs})" if len(c) > 1 else cs)
        body = " + ".join(parts) if parts else "0"
        if self.order is not None:
            body += f" + O(z^{self.order + 1})"
        return body

    def __repr__(self) -> str:
        return f"LaurentSeries({self})"

    def to_json(self) -> dict:
        return {
            "valuation": self.valuation,
            "order": self.order,
            "coeffs": [c.to_json() for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> LaurentSeries:
        return cls(int(data["valuation"]), [Poly.from_json(c) for c in data["coeffs"]], data["order"])


def _coerce(x: LaurentSeries | PolyLike) -> LaurentSeries:
    if isinstance(x, LaurentSeries):
        return x
    return LaurentSeries(0, [Poly.coerce(x)], None)


def z(n: int = 1) -> LaurentSeries:
    """The exact monomial ``z^n``."""
    return LaurentSeries.monomial(n)


def series_arith(op: str, f: LaurentSeries, g: LaurentSeries) -> LaurentSeries:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def invert_unit(f: LaurentSeries, order: int = DEFAULT_ORDER) -> LaurentSeries:
    """Inverse of ``f`` known up to ``z^order``; the leading coefficient must be ±1."""
    if f.is_zero():
        raise ZeroDivisionError("cannot invert the zero series")
    c0 = f.coeffs[0]
    if c0 != 1 and c0 != -1:
        raise ValueError("non-invertible leading coefficient")
    v = f.valuation
    n_terms = order + v + 1
    if f.order is not None and order + v > f.order - v:
        raise PrecisionError("insufficient precision")
    if n_terms <= 0:
        return LaurentSeries.zero(order)
    u = c0.as_int()
    d: list[Poly] = [Poly.const(u)]
    cs = f.coeffs
    for n in range(1, n_terms):
        acc = Poly.const(0)
        for i in range(1, min(n, len(cs) - 1) + 1):
            acc = acc + cs[i] * d[n - i]
        d.append(acc.scale(-u))
    return LaurentSeries(-v, d, order)


@lru_cache(maxsize=4096)
def shifted_power(k: int, s: int = 0, order: int | None = DEFAULT_ORDER) -> LaurentSeries:
    """``(z⁻¹|σ^s α)^k``: exact for ``k >= 0``, known to ``z^order`` for ``k < 0``."""
    if k >= 0:
        result = LaurentSeries(0, [1], None)
        for i in range(1, k + 1):
            result = result * LaurentSeries(-1, [1, -alpha(i + s)], None)
        return result
    if order is None:
        raise ValueError("negative shifted powers need a truncation order")
    # z^{|k|} ∏ 1/(1 - α z), as a product of geometric series
    m = -k
    rel = order - m
    result = LaurentSeries(m, [1], order)
    for i in range(k + 1, 1):
        a = alpha(i + s)
        geo = [Poly.const(1)]
        for _ in range(max(0, rel)):
            geo.append(geo[-1] * a)
        result = result * LaurentSeries(0, geo, max(rel, -1))
    return result.truncate(order)


def to_shifted_basis(f: LaurentSeries, s: int = 0, k_min: int = 0) -> dict[int, Poly]:
    """Coefficients ``c_k`` (``k >= k_min``) of ``f`` in the basis ``(z⁻¹|σ^s α)^k``.

    Peels the top basis element off repeatedly; basis element ``k`` starts at
    ``z^{-k}``, so only coefficients up to ``z^{-k_min}`` matter.
    """
    bound = -k_min
    if f.order is not None and f.order < bound:
        raise PrecisionError("insufficient precision")
    g = f.truncate(bound)
    out: dict[int, Poly] = {}
    while not g.is_zero():
        v = g.valuation
        if v > bound:
            break
        k = -v
        c = g.coeffs[0]
        out[k] = c
        g = g - shifted_power(k, s, bound).truncate(bound) * c
    return out


def from_shifted_basis(
    coeffs: Mapping[int, PolyLike], s: int = 0, order: int | None = DEFAULT_ORDER
) -> LaurentSeries:
    """Resum ``Σ c_k (z⁻¹|σ^s α)^k``; exact when every ``k >= 0`` and ``order`` is None."""
    acc = LaurentSeries.zero(order)
    for k, c in coeffs.items():
        acc = acc + shifted_power(k, s, order) * Poly.coerce(c)
    return acc.truncate(order)


def residue(f: LaurentSeries) -> Poly:
    """The coefficient of ``z⁻¹``."""
    if f.order is not None and f.order < -1:
        raise PrecisionError("insufficient precision")
    return f[-1]
