"""Fermionic Fock space, Clifford generators and deformed current operators.

A basis ket ``|λ⟩_m`` is the semi-infinite wedge with particles at the sites
``λ_k - k + 1 + m`` (``k >= 1``); the charge-``m`` vacuum fills every site
``<= m``.  Coefficients are :class:`~dschur.polyring.Poly`.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from functools import lru_cache
from typing import NamedTuple

from .laurent import LaurentSeries, residue, shifted_power
from .partitions import Partition
from .polyring import Poly, PolyLike, alpha, e_alpha, h_alpha

__all__ = [
    "KetKey",
    "FockVector",
    "ket",
    "maya_positions",
    "partition_from_positions",
    "psi_apply",
    "psi_star_apply",
    "current_entry",
    "current_entry_residue",
    "apply_current",
    "compose_current_entry",
    "cocycle_currents",
    "vacuum_pairing_table",
    "dual_vacuum_pairing_table",
]


class KetKey(NamedTuple):
    partition: Partition
    charge: int


class FockVector:
    """Finite linear combination of kets ``|λ⟩_m`` with Poly coefficients."""

    __slots__ = ("_d",)

    def __init__(self, entries: Mapping[tuple, PolyLike] | Iterable[tuple[tuple, PolyLike]] = ()) -> None:
        d: dict[KetKey, Poly] = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for key, c in items:
            k = KetKey(Partition(key[0]), int(key[1]))
            c = Poly.coerce(c)
            d[k] = d[k] + c if k in d else c
        self._d = {k: c for k, c in d.items() if c}

    @classmethod
    def _raw(cls, d: dict[KetKey, Poly]) -> FockVector:
        v = object.__new__(cls)
        v._d = {k: c for k, c in d.items() if c}
        return v

    def items(self) -> list[tuple[KetKey, Poly]]:
        return sorted(self._d.items(), key=lambda kv: (kv[0].charge, tuple(kv[0].partition)))

    def __iter__(self) -> Iterator[tuple[KetKey, Poly]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._d)

    def __bool__(self) -> bool:
        return bool(self._d)

    def coefficient(self, partition: Iterable[int], charge: int = 0) -> Poly:
        return self._d.get(KetKey(Partition(partition), charge), Poly.const(0))

    def support(self) -> set[KetKey]:
        return set(self._d)

    def __add__(self, other: FockVector) -> FockVector:
        d = dict(self._d)
        for k, c in other._d.items():
            d[k] = d[k] + c if k in d else c
        return FockVector._raw(d)

    def __neg__(self) -> FockVector:
        return FockVector._raw({k: -c for k, c in self._d.items()})

    def __sub__(self, other: FockVector) -> FockVector:
        return self + (-other)

    def __mul__(self, c: PolyLike) -> FockVector:
        c = Poly.coerce(c)
        return FockVector._raw({k: v * c for k, v in self._d.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self._d == other._d

    def __hash__(self) -> int:
        return hash(frozenset(self._d.items()))

    def map_coeffs(self, f) -> FockVector:
        return FockVector._raw({k: f(c) for k, c in self._d.items()})

    def __str__(self) -> str:
        if not self._d:
            return "0"
        parts = []
        for key, c in self.items():
            label = f"|{key.partition}>" if key.charge == 0 else f"|{key.partition}>_{key.charge}"
            cs = str(c)
            if cs == "1":
                parts.append(("+", label))
            elif cs == "-1":
                parts.append(("-", label))
            elif len(c) == 1 and cs.startswith("-"):
                parts.append(("-", f"{cs[1:]}*{label}"))
            else:
                parts.append(("+", f"({cs}){label}" if len(c) > 1 else f"{cs}*{label}"))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"FockVector({self})"

    def to_json(self) -> dict:
        return {
            "kets": [
                {"partition": list(k.partition), "charge": k.charge, "coeff": c.to_json()}
                for k, c in self.items()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> FockVector:
        return cls(
            ((tuple(e["partition"]), e["charge"]), Poly.from_json(e["coeff"])) for e in data["kets"]
        )


def ket(partition: Iterable[int] = (), charge: int = 0, coeff: PolyLike = 1) -> FockVector:
    return FockVector({(tuple(Partition(partition)), charge): coeff})


# -- Maya diagrams ----------------------------------------------------------


def _tail(key: KetKey) -> int:
    """Top of the solid sea: every site ``<= _tail`` is occupied."""
    return key.charge - len(key.partition)


def _positions(key: KetKey, lo: int) -> list[int]:
    """Occupied sites ``>= lo`` in decreasing order (requires ``lo <= _tail + 1``)."""
    lam, m = key.partition, key.charge
    pos = [p - k + m for k, p in enumerate(lam)]
    pos.extend(range(_tail(key), lo - 1, -1))
    return pos


def maya_positions(key: tuple, window: tuple[int, int]) -> set[int]:
    """Occupied sites inside ``window = (lo, hi)``; sites below ``lo`` are all occupied."""
    key = KetKey(Partition(key[0]), int(key[1]))
    lo, hi = window
    pos = _positions(key, min(lo, _tail(key) + 1))
    if lo > _tail(key) + 1 or (pos and pos[0] > hi):
        raise ValueError(f"window [{lo}, {hi}] does not cover the excited sites of {key}")
    return {p for p in pos if p >= lo}


def partition_from_positions(occupied: Iterable[int], lo: int) -> KetKey:
    """Inverse of :func:`maya_positions`: sites below ``lo`` are taken as occupied."""
    pos = sorted(set(occupied), reverse=True)
    if any(p < lo for p in pos):
        raise ValueError("occupied sites must lie in the window")
    m = lo + len(pos) - 1
    parts = [p + k - m for k, p in enumerate(pos)]
    if any(a < b for a, b in zip(parts, parts[1:])) or (parts and parts[-1] < 0):
        raise ValueError("not a valid Maya diagram")
    return KetKey(Partition(parts), m)


def _key_from_sorted(pos: list[int], lo: int) -> KetKey:
    m = lo + len(pos) - 1
    return KetKey(Partition([p + k - m for k, p in enumerate(pos)]), m)


# -- Clifford generators ------------------------------------------------------


def psi_apply(i: int, v: FockVector) -> FockVector:
    """``ψ_i``: add a particle at site ``i`` with sign ``(-1)^{#particles above i}``."""
    out: dict[KetKey, Poly] = {}
    for key, c in v._d.items():
        lo = min(i, _tail(key) + 1)
        pos = _positions(key, lo)
        if i in pos:
            continue
        above = sum(1 for p in pos if p > i)
        new = sorted(pos + [i], reverse=True)
        nk = _key_from_sorted(new, lo)
        term = -c if above % 2 else c
        out[nk] = out[nk] + term if nk in out else term
    return FockVector._raw(out)


def psi_star_apply(j: int, v: FockVector) -> FockVector:
    """``ψ*_j``: remove the particle at site ``j`` with sign ``(-1)^{#particles above j}``."""
    out: dict[KetKey, Poly] = {}
    for key, c in v._d.items():
        lo = min(j, _tail(key) + 1)
        pos = _positions(key, lo)
        if j not in pos:
            continue
        above = sum(1 for p in pos if p > j)
        new = [p for p in pos if p != j]
        nk = _key_from_sorted(new, lo)
        term = -c if above % 2 else c
        out[nk] = out[nk] + term if nk in out else term
    return FockVector._raw(out)


# -- current operators --------------------------------------------------------


@lru_cache(maxsize=1 << 16)
def current_entry(i: int, j: int, k: int) -> Poly:
    """Matrix entry ``A_ij^k`` of the deformed current ``J_k``."""
    if k > 0:
        if j >= i + k:
            return e_alpha(j - i - k, i + 1, j - 1, -1)
        return Poly.const(0)
    if j <= i <= j - k:
        return h_alpha(j - i - k, j, i, 1)
    return Poly.const(0)


def current_entry_residue(i: int, j: int, k: int) -> Poly:
    """``A_ij^k`` as the ``z^{1-k}`` coefficient of ``(z⁻¹|σ^i α)^{j-i-1}``."""
    n = j - i - 1
    series: LaurentSeries = shifted_power(n, i, max(1 - k, -n, 0))
    return series[1 - k]


def _diagonal(k: int, key: KetKey) -> Poly:
    """Normal-ordering correction for ``k < 0``."""
    d = -k
    acc = Poly.const(0)
    lo = min(0, _tail(key) + 1)
    pos = _positions(key, lo)
    occ = set(pos)
    for p in pos:
        if p > 0:
            acc = acc + alpha(p) ** d
    for s in range(lo, 1):
        if s not in occ:
            acc = acc - alpha(s) ** d
    return acc


def apply_current(k: int, v: FockVector) -> FockVector:
    """Action of ``J_k`` (``k != 0``) on a Fock vector."""
    if k == 0:
        raise ValueError("J_0 not supported")
    out: dict[KetKey, Poly] = {}

    def put(key: KetKey, c: Poly) -> None:
        if c:
            out[key] = out[key] + c if key in out else c

    for key, c in v._d.items():
        lo = _tail(key) + 1 - (max(0, -k))
        pos = _positions(key, lo)
        occ = set(pos)
        top = pos[0] if pos else lo
        for j in pos:
            if k > 0:
                dests = range(lo, j - k + 1)
            else:
                dests = range(j + 1, j - k + 1)
            for i in dests:
                if i in occ or i > top + max(0, -k):
                    continue
                a = current_entry(i, j, k)
                if not a:
                    continue
                lo_, hi_ = min(i, j), max(i, j)
                between = sum(1 for p in pos if lo_ < p < hi_)
                new = sorted([p for p in pos if p != j] + [i], reverse=True)
                term = a * c
                put(_key_from_sorted(new, lo), -term if between % 2 else term)
        if k < 0:
            put(key, _diagonal(k, key) * c)
    return FockVector._raw(out)


def _band_right(i: int, k: int) -> tuple[float, float]:
    """Range of ``j`` with ``A_ij^k`` possibly nonzero."""
    return (i + k, float("inf")) if k > 0 else (i + k, i)


def _band_left(j: int, k: int) -> tuple[float, float]:
    """Range of ``i`` with ``A_ij^k`` possibly nonzero."""
    return (float("-inf"), j - k) if k > 0 else (j, j - k)


def compose_current_entry(p: int, q: int, k: int, l: int) -> Poly:  # noqa: E741
    """``Σ_a A_pa^k A_aq^ℓ`` over the band where both factors can be nonzero."""
    lo, hi = _band_right(p, k)
    lo2, hi2 = _band_left(q, l)
    acc = Poly.const(0)
    for a in range(int(max(lo, lo2)), int(min(hi, hi2)) + 1):
        x = current_entry(p, a, k)
        if x:
            y = current_entry(a, q, l)
            if y:
                acc = acc + x * y
    return acc


def cocycle_currents(k: int, l: int, window: int) -> Poly:  # noqa: E741
    """``φ(J_k, J_ℓ) = Σ_{i<=0<j} A_ij^k A_ji^ℓ - Σ_{j<=0<i} A_ij^k A_ji^ℓ``."""
    if window < max(abs(k), abs(l)):
        raise ValueError(f"window {window} is smaller than the support band {max(abs(k), abs(l))}")
    acc = Poly.const(0)
    for i in range(1 - window, 1):
        for j in range(1, window + 1):
            acc = acc + current_entry(i, j, k) * current_entry(j, i, l)
            acc = acc - current_entry(j, i, k) * current_entry(i, j, l)
    return acc


# -- vacuum pairings of the deformed fermion fields --------------------------


def _vacuum_matrix(sites: Iterable[int], first_psi: bool) -> dict[tuple[int, int], int]:
    """Nonzero ``⟨∅|ψ_i ψ*_j|∅⟩`` (or ``⟨∅|ψ*_j ψ_i|∅⟩``), computed on Fock space."""
    vac = ket()
    out = {}
    sites = list(sites)
    for i in sites:
        for j in sites:
            if first_psi:
                w = psi_apply(i, psi_star_apply(j, vac))
            else:
                w = psi_star_apply(j, psi_apply(i, vac))
            c = w.coefficient((), 0)
            if c:
                out[(i, j)] = c.as_int()
    return out


def vacuum_pairing_table(n: int) -> list[list[Poly]]:
    """Coefficients of ``w^b z^{-q}`` (``0 <= b, q <= n``) in ``⟨∅|ψ(z|α)ψ*(w|α)|∅⟩``.

    ``ψ(z|α) = Σ_i (z⁻¹|σ^i α)^{-i} ψ_i`` and
    ``ψ*(w|α) = Σ_j w⁻¹ (w⁻¹|α)^{j-1} ψ*_j``; the ``w``-factor of site ``j``
    starts at ``w^{-j}``, so sites ``-n <= j <= n + 1`` suffice.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    table = [[Poly.const(0)] * (n + 1) for _ in range(n + 1)]
    for (i, j), sign in _vacuum_matrix(range(-n, n + 2), True).items():
        zpart = shifted_power(-i, i, n)
        wpart = shifted_power(j - 1, 0, n + 1).shift(-1)
        for b in range(n + 1):
            wc = wpart[b]
            if not wc:
                continue
            for q in range(n + 1):
                zc = zpart[-q]
                if zc:
                    table[b][q] = table[b][q] + wc * zc * sign
    return table


def dual_vacuum_pairing_table(n: int) -> list[list[Poly]]:
    """Coefficients of ``z^b w^{-q}`` (``1 <= b, q <= n``) in ``⟨∅|ψ*(w|α)ψ(z|α)|∅⟩``.

    Row/column ``0`` of the returned ``(n+1) x (n+1)`` table stands for
    ``b = 1``/``q = 1``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    table = [[Poly.const(0)] * n for _ in range(n)]
    for (i, j), sign in _vacuum_matrix(range(-n, n + 2), False).items():
        zpart = shifted_power(-i, i, n)
        wpart = shifted_power(j - 1, 0, n + 1).shift(-1)
        for b in range(1, n + 1):
            zc = zpart[b]
            if not zc:
                continue
            for q in range(1, n + 1):
                wc = wpart[-q]
                if wc:
                    table[b - 1][q - 1] = table[b - 1][q - 1] + wc * zc * sign
    return table
