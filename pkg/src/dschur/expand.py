"""Expansions of products in double Schur functions.

* Murnaghan–Nakayama: ``p_k s_λ`` and ``k ∂s_λ/∂p_k`` read off from the
  current operators ``J_{-k}`` and ``J_k`` on ``|λ⟩``.
* Pieri: coefficient of ``s_λ`` in ``h_k s_μ`` (closed form and residue),
  the dual ``e_k`` rule and the skew version.
* Raising operators: ``s_λ = ∏_{i<j} (1 - R_ij) h_{λ,δ}`` as a list of words
  in the shifted complete functions ``h_{k,s} = h_k(‖σ^s α)``.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

from .fock import apply_current, ket
from .laurent import LaurentSeries, residue
from .partitions import (
    Partition,
    is_horizontal_strip,
    is_vertical_strip,
    skew_cells,
)
from .polyring import Kind, Poly, PolyLike, alpha, elem_sym, homog_sym
from .symfunc import GENERIC, SkewShape, SuperContext, double_h, schur_classical

__all__ = [
    "SchurExpansion",
    "HWord",
    "mn_multiply",
    "mn_derivative",
    "powersum_schur_expansion",
    "classical_schur_expansion",
    "pieri_h_coeff",
    "pieri_e_coeff",
    "pieri_h_expansion",
    "pieri_e_expansion",
    "skew_pieri_coeff",
    "skew_pieri_expansion",
    "raising_expansion",
    "hsymbol_evaluate",
]


class SchurExpansion:
    """Finite sum ``Σ c_λ s_λ`` with Poly coefficients."""

    __slots__ = ("_d",)

    def __init__(self, entries: Mapping[Iterable[int], PolyLike] | None = None) -> None:
        d: dict[Partition, Poly] = {}
        for lam, c in (entries or {}).items():
            p = Partition(lam)
            c = Poly.coerce(c)
            d[p] = d[p] + c if p in d else c
        self._d = {p: c for p, c in d.items() if c}

    def items(self) -> list[tuple[Partition, Poly]]:
        """Terms by decreasing size, then reverse lexicographic partition order."""
        return sorted(self._d.items(), key=lambda kv: (-kv[0].size, [-p for p in kv[0]]))

    def __iter__(self):
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._d)

    def __getitem__(self, lam: Iterable[int]) -> Poly:
        return self._d.get(Partition(lam), Poly.const(0))

    def support(self) -> set[Partition]:
        return set(self._d)

    def __add__(self, other: SchurExpansion) -> SchurExpansion:
        d = dict(self._d)
        for p, c in other._d.items():
            d[p] = d[p] + c if p in d else c
        return SchurExpansion(d)

    def __mul__(self, c: PolyLike) -> SchurExpansion:
        c = Poly.coerce(c)
        return SchurExpansion({p: v * c for p, v in self._d.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self._d == other._d

    def __hash__(self) -> int:
        return hash(frozenset(self._d.items()))

    def evaluate(self, schur) -> Poly:
        """``Σ c_λ · schur(λ)`` for a callable giving each Schur function."""
        acc = Poly.const(0)
        for p, c in self._d.items():
            acc = acc + c * schur(p)
        return acc

    def __str__(self) -> str:
        if not self._d:
            return "0"
        out = []
        for p, c in self.items():
            label = f"s[{p}]"
            cs = str(c)
            if cs == "1":
                out.append(("+", label))
            elif cs == "-1":
                out.append(("-", label))
            elif len(c) == 1 and cs.startswith("-"):
                out.append(("-", f"{cs[1:]}*{label}"))
            elif len(c) == 1:
                out.append(("+", f"{cs}*{label}"))
            else:
                out.append(("+", f"({cs})*{label}"))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"SchurExpansion({self})"

    def latex(self) -> str:
        if not self._d:
            return "0"
        out = []
        for p, c in self.items():
            label = f"s_{{{p}}}" if p else r"s_{\varnothing}"
            body = c.latex()
            if body == "1":
                out.append(("+", label))
            elif body == "-1":
                out.append(("-", label))
            elif len(c) == 1 and body.startswith("-"):
                out.append(("-", f"{body[1:]} {label}"))
            elif len(c) == 1:
                out.append(("+", f"{body} {label}"))
            else:
                out.append(("+", f"({body}) {label}"))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> dict:
        terms = sorted(self._d.items(), key=lambda kv: tuple(kv[0]))
        return {"terms": [{"partition": list(p), "coeff": c.to_json()} for p, c in terms]}

    @classmethod
    def from_json(cls, data: Mapping) -> SchurExpansion:
        return cls({tuple(t["partition"]): Poly.from_json(t["coeff"]) for t in data["terms"]})


# -- Murnaghan–Nakayama -------------------------------------------------------


def _charge_zero(v) -> SchurExpansion:
    return SchurExpansion({key.partition: c for key, c in v.items() if key.charge == 0})


def mn_multiply(lam: Iterable[int], k: int) -> SchurExpansion:
    """``p_k s_λ`` from ``J_{-k}|λ⟩``."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    return _charge_zero(apply_current(-k, ket(lam)))


def mn_derivative(lam: Iterable[int], k: int) -> SchurExpansion:
    """``k ∂s_λ/∂p_k`` from ``J_k|λ⟩``."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    return _charge_zero(apply_current(k, ket(lam)))


def powersum_schur_expansion(rho: Sequence[int]) -> SchurExpansion:
    """``p_{ρ_1} ⋯ p_{ρ_r}`` by folding :func:`mn_multiply` from ``s_∅``."""
    exp = SchurExpansion({(): 1})
    for k in rho:
        nxt = SchurExpansion()
        for lam, c in exp.items():
            nxt = nxt + mn_multiply(lam, k) * c
        exp = nxt
    return exp


def _h_split(p: Poly) -> dict[Partition, Poly]:
    """Group ``p`` by its monomial in the generic ``h_m``; α-parts become coefficients."""
    out: dict[Partition, Poly] = {}
    for mono, c in p.terms():
        parts: list[int] = []
        coeff = Poly.const(c)
        for v, e in mono:
            if v.kind == Kind.H:
                parts.extend([v.index] * e)
            elif v.kind == Kind.ALPHA:
                coeff = coeff * Poly.var(v) ** e
            else:
                raise ValueError("expected a polynomial in the generic h_m and α only")
        lam = Partition(sorted(parts, reverse=True))
        out[lam] = out[lam] + coeff if lam in out else coeff
    return {lam: c for lam, c in out.items() if c}


def classical_schur_expansion(p: PolyLike) -> SchurExpansion:
    """Write a generic-ring polynomial in classical Schur functions ``s_λ(x/y)``.

    ``s_λ = h_λ + (h_μ with μ lexicographically larger)``, so the smallest
    ``h``-monomial present always carries the coefficient of its own ``s_λ``.
    """
    rest = Poly.coerce(p)
    terms: dict[Partition, Poly] = {}
    while rest:
        groups = _h_split(rest)
        lam = min(groups, key=lambda q: (q.size, tuple(q)))
        c = groups[lam]
        terms[lam] = c
        rest = rest - schur_classical(lam) * c
    return SchurExpansion(terms)


# -- Pieri --------------------------------------------------------------------


def _contents(lam: Partition, mu: Partition) -> list[int]:
    return [c - r for r, c in skew_cells(lam, mu)]


def _check_ell(lam: Partition, ell: int | None) -> int:
    need = lam[0] if lam else 0
    if ell is None:
        return max(need, len(lam))
    if ell < need:
        raise ValueError(f"ell={ell} is too small: the column product needs ell >= λ_1 = {need}")
    return ell


def pieri_h_coeff(
    mu: Iterable[int], lam: Iterable[int], k: int, ell: int | None = None, method: str = "closed"
) -> Poly:
    """Coefficient of ``s_λ`` in ``h_k(‖α) s_μ``.

    ``ell`` indexes the column product and must be at least ``λ_1``
    (default: the smallest admissible value).
    """
    mu, lam = Partition(mu), Partition(lam)
    if k < 0:
        raise ValueError("k must be non-negative")
    if not is_horizontal_strip(lam, mu):
        return Poly.const(0)
    ell = _check_ell(lam, ell)
    size = lam.size - mu.size
    if size > k:
        return Poly.const(0)
    conj = lam.conjugate()
    cols = [alpha(j - conj.part(j)) for j in range(1, ell + 1)]
    cont = [alpha(c) for c in _contents(lam, mu)]
    if method == "closed":
        h_in = cont + [alpha(j) for j in range(1, ell + 1)]
        e_in = [-a for a in cols] + [-alpha(i) for i in range(1, k)]
        acc = Poly.const(0)
        for s in range(k - size + 1):
            acc = acc + homog_sym(h_in, s) * elem_sym(e_in, k - size - s)
        return acc
    if method == "residue":
        order = k - size
        f = LaurentSeries(0, [1], order)
        for j in range(1, ell + 1):
            f = f * _linear(cols[j - 1], order) * _geometric(alpha(j), order)
        for a in cont:
            f = f * _geometric(a, order)
        for i in range(1, k):
            f = f * _linear(alpha(i), order)
        # z^{|λ/μ|} from the cells and z^{-k-1} from the kernel
        return residue(f.shift(size - k - 1))
    raise ValueError(f"method must be 'closed' or 'residue', got {method!r}")


def _linear(a: Poly, order: int) -> LaurentSeries:
    """``1 - a z``."""
    return LaurentSeries(0, [1, -a], None).truncate(order)


def _geometric(a: Poly, order: int) -> LaurentSeries:
    """``1 / (1 - a z)`` to ``z^order``."""
    cs = [Poly.const(1)]
    for _ in range(order):
        cs.append(cs[-1] * a)
    return LaurentSeries(0, cs, order)


def pieri_e_coeff(mu: Iterable[int], lam: Iterable[int], k: int, ell: int | None = None) -> Poly:
    """Dual coefficient: ``e_k(‖α) s_μ = (-1)^k Σ_λ c̄ s_λ``; ``ell >= ℓ(λ)``."""
    mu, lam = Partition(mu), Partition(lam)
    if k < 0:
        raise ValueError("k must be non-negative")
    if not is_vertical_strip(lam, mu):
        return Poly.const(0)
    if ell is None:
        ell = len(lam)
    if ell < len(lam):
        raise ValueError(f"ell={ell} is smaller than the length of {lam}")
    size = lam.size - mu.size
    if size > k:
        return Poly.const(0)
    h_in = [alpha(c + 1) for c in _contents(lam, mu)] + [alpha(i) for i in range(1 - ell, 1)]
    e_in = [-alpha(lam.part(j) - j + 1) for j in range(1, ell + 1)] + [
        -alpha(i) for i in range(2 - k, 1)
    ]
    acc = Poly.const(0)
    for s in range(k - size + 1):
        acc = acc + homog_sym(h_in, s) * elem_sym(e_in, k - size - s)
    return -acc if size % 2 else acc


def _horizontal_extensions(mu: Partition, max_cells: int) -> list[Partition]:
    """All ``λ ⊇ μ`` with ``λ/μ`` a horizontal strip of at most ``max_cells`` cells."""
    out: list[Partition] = []
    rows = len(mu) + 1

    def rec(i: int, acc: list[int], left: int) -> None:
        if i == rows:
            out.append(Partition(acc))
            return
        cap = left if i == 0 else min(left, mu.part(i) - mu.part(i + 1))
        for add in range(cap + 1):
            rec(i + 1, acc + [mu.part(i + 1) + add], left - add)

    rec(0, [], max_cells)
    return out


def pieri_h_expansion(mu: Iterable[int], k: int) -> SchurExpansion:
    """``h_k(‖α) s_μ`` as a Schur expansion."""
    mu = Partition(mu)
    return SchurExpansion({lam: pieri_h_coeff(mu, lam, k) for lam in _horizontal_extensions(mu, k)})


def pieri_e_expansion(mu: Iterable[int], k: int) -> SchurExpansion:
    """``e_k(‖α) s_μ`` as a Schur expansion (signs included)."""
    mu = Partition(mu)
    sign = -1 if k % 2 else 1
    terms = {}
    for lamc in _horizontal_extensions(mu.conjugate(), k):
        lam = lamc.conjugate()
        terms[lam] = pieri_e_coeff(mu, lam, k).scale(sign)
    return SchurExpansion(terms)


def skew_pieri_coeff(
    outer: tuple[Iterable[int], Iterable[int]],
    inner: tuple[Iterable[int], Iterable[int]],
    k: int,
    kind: str = "h",
    ell: int | None = None,
) -> Poly:
    """Coefficient of ``s_{λ/η}`` in ``h_k s_{μ/ν}`` (or the dual ``e_k`` rule).

    ``outer = (λ, η)`` and ``inner = (μ, ν)``.  For ``kind="e"`` the result
    is ``c̄`` with ``e_k s_{μ/ν} = (-1)^k Σ c̄ s_{λ/η}``.
    """
    lam, eta = Partition(outer[0]), Partition(outer[1])
    mu, nu = Partition(inner[0]), Partition(inner[1])
    if k < 0:
        raise ValueError("k must be non-negative")
    if kind == "h":
        if not (is_horizontal_strip(lam, mu) and is_vertical_strip(nu, eta)):
            return Poly.const(0)
    elif kind == "e":
        if not (is_vertical_strip(lam, mu) and is_horizontal_strip(nu, eta)):
            return Poly.const(0)
    else:
        raise ValueError(f"kind must be 'h' or 'e', got {kind!r}")
    cells = lam.size - mu.size + nu.size - eta.size
    if cells > k:
        return Poly.const(0)
    need = max([lam[0] if lam else 0, len(lam), len(nu), nu[0] if nu else 0, len(eta)])
    if ell is None:
        ell = need
    if ell < need:
        raise ValueError(f"ell={ell} is too small (need {need})")
    order = k - cells
    # the h rule reads λ/μ through the x-kernel and ν/η through the y-kernel;
    # the dual rule swaps the two skew shapes and uses (z; ια)^{k-1}
    if kind == "h":
        x_part, x_cells = lam, _contents(lam, mu)
        y_part, y_cells = nu, _contents(nu, eta)
        kernel = range(1, k)
    else:
        x_part, x_cells = nu, _contents(nu, eta)
        y_part, y_cells = lam, _contents(lam, mu)
        kernel = range(0, 1 - k, -1)
    f = LaurentSeries(0, [1], order)
    conj = x_part.conjugate()
    for j in range(1, ell + 1):
        f = f * _linear(alpha(j - conj.part(j)), order) * _geometric(alpha(j), order)
    for c in x_cells:
        f = f * _geometric(alpha(c), order)
    for j in range(1, ell + 1):
        f = f * _linear(alpha(y_part.part(j) - j + 1), order) * _geometric(alpha(1 - j), order)
    for c in y_cells:
        f = f * _geometric(alpha(c + 1), order)
    for i in kernel:
        f = f * _linear(alpha(i), order)
    sign = -1 if len(y_cells) % 2 else 1
    return residue(f.shift(cells - k - 1)).scale(sign)


def skew_pieri_expansion(
    mu: Iterable[int], nu: Iterable[int], k: int, kind: str = "h"
) -> dict[tuple[Partition, Partition], Poly]:
    """All nonzero ``(λ, η) -> coefficient`` in the skew Pieri rule."""
    from .partitions import subpartitions

    mu, nu = Partition(mu), Partition(nu)
    out: dict[tuple[Partition, Partition], Poly] = {}
    if kind == "h":
        lams = _horizontal_extensions(mu, k)
        etas = [e for e in subpartitions(nu) if is_vertical_strip(nu, e)]
    else:
        lams = [p.conjugate() for p in _horizontal_extensions(mu.conjugate(), k)]
        etas = [e for e in subpartitions(nu) if is_horizontal_strip(nu, e)]
    for lam in lams:
        for eta in etas:
            if lam.size - mu.size + nu.size - eta.size > k:
                continue
            c = skew_pieri_coeff((lam, eta), (mu, nu), k, kind)
            if c:
                out[(lam, eta)] = c
    return out


# -- raising operators ----------------------------------------------------------


@dataclass(frozen=True)
class HWord:
    """``coeff · ∏ h_{k_i, s_i}`` with ``h_{k,s} = h_k(‖σ^s α)``."""

    factors: tuple[tuple[int, int], ...]
    coeff: Poly = field(default_factory=lambda: Poly.const(1))

    def normalized(self) -> HWord | None:
        """Drop ``k = 0`` factors; ``None`` if some ``k < 0`` kills the word."""
        if any(k < 0 for k, _ in self.factors):
            return None
        return HWord(tuple(sorted(f for f in self.factors if f[0] != 0)), self.coeff)

    def __str__(self) -> str:
        body = "*".join(f"h[{k},{s}]" for k, s in self.factors) or "1"
        c = str(self.coeff)
        return body if c == "1" else f"-{body}" if c == "-1" else f"({c})*{body}"


def raising_expansion(lam: Iterable[int]) -> list[HWord]:
    """Expand ``∏_{i<j} (1 - R_ij) h_{λ,δ}`` with ``δ = (0, 1, …, ℓ-1)``.

    ``R_ij`` adds 1 to entry ``i`` and removes 1 from entry ``j`` of both the
    degree vector and ``δ``, so each term is a displacement vector ``v``
    giving ``∏_i h_{λ_i + v_i, -(δ_i + v_i)}``.  Terms are merged by ``v``
    while expanding the product, which realises all cancellations.
    """
    lam = Partition(lam)
    ell = len(lam)
    terms: dict[tuple[int, ...], int] = {(0,) * ell: 1}
    for i in range(ell):
        for j in range(i + 1, ell):
            nxt = dict(terms)
            for v, c in terms.items():
                w = list(v)
                w[i] += 1
                w[j] -= 1
                key = tuple(w)
                nxt[key] = nxt.get(key, 0) - c
            terms = {v: c for v, c in nxt.items() if c}
    words = []
    for v, c in sorted(terms.items(), reverse=True):
        word = HWord(
            tuple((lam[i] + v[i], -(i + v[i])) for i in range(ell)), Poly.const(c)
        ).normalized()
        if word is not None:
            words.append(word)
    return words


def hsymbol_evaluate(words: Iterable[HWord], ctx: SuperContext | int | None = GENERIC) -> Poly:
    """``Σ coeff · ∏ h_k(‖σ^s α)`` in the given context."""
    acc = Poly.const(0)
    for w in words:
        term = w.coeff
        for k, s in w.factors:
            if k < 0:
                term = Poly.const(0)
                break
            term = term * double_h(k, ctx, s)
        acc = acc + term
    return acc
