"""Exact sparse multivariate polynomials over the integers.

Variables come in four families: parameters ``α_i`` (any integer index),
``x_i`` and ``y_i`` (index >= 1), and ``h_i`` (index >= 1), an opaque
generator standing for the classical supersymmetric complete function
``h_i(x/y)`` in an unbounded alphabet.

Internally a monomial is a single Python integer: every variable owns a
16-bit field, so multiplying monomials is integer addition.  The field
assignment is global and append-only, which keeps packed monomials
comparable across polynomials.
"""

from __future__ import annotations

import itertools

import threading
from collections.abc import Callable, Iterable, Iterator, Mapping
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Union

__all__ = [
    "Kind",
    "Var",
    "Poly",
    "PolyLike",
    "alpha",
    "xvar",
    "yvar",
    "hvar",
    "poly_arith",
    "shift_alpha",
    "iota_alpha",
    "elem_sym",
    "homog_sym",
    "specialize",
    "linear_factors",
    "factored_latex",
    "e_alpha",
    "h_alpha",
]

_BITS = 16
_MASK = (1 << _BITS) - 1
_MAX_DEGREE = _MASK


class Kind(IntEnum):
    ALPHA = 0
    X = 1
    Y = 2
    H = 3


_KIND_TAG = {Kind.ALPHA: "a", Kind.X: "x", Kind.Y: "y", Kind.H: "h"}
_TAG_KIND = {v: k for k, v in _KIND_TAG.items()}


class Var(NamedTuple):
    """A polynomial variable; ordered by kind, then index."""

    kind: Kind
    index: int

    def validate(self) -> Var:
        if not isinstance(self.index, int):
            raise TypeError(f"variable index must be an int, got {self.index!r}")
        if self.kind != Kind.ALPHA and self.index < 1:
            raise ValueError(f"{_KIND_TAG[self.kind]}-variables need index >= 1, got {self.index}")
        return self

    def text(self) -> str:
        return f"{_KIND_TAG[self.kind]}[{self.index}]"

    def latex(self) -> str:
        base = r"\alpha" if self.kind == Kind.ALPHA else _KIND_TAG[self.kind]
        return f"{base}_{{{self.index}}}"


# -- packed monomial registry -------------------------------------------------

_slot_of: dict[Var, int] = {}
_var_of: list[Var] = []
_registry_lock = threading.Lock()


def _slot(v: Var) -> int:
    s = _slot_of.get(v)
    if s is None:
        with _registry_lock:
            s = _slot_of.get(v)
            if s is None:
                s = len(_var_of)
                _var_of.append(v)
                _slot_of[v] = s
    return s


def _unit(v: Var) -> int:
    return 1 << (_BITS * _slot(v))


@lru_cache(maxsize=1 << 16)
def _decode(m: int) -> tuple[tuple[Var, int], ...]:
    out = []
    slot = 0
    while m:
        e = m & _MASK
        if e:
            out.append((_var_of[slot], e))
        m >>= _BITS
        slot += 1
    out.sort()
    return tuple(out)


def _encode(mono: Iterable[tuple[Var, int]]) -> tuple[int, int]:
    packed = 0
    deg = 0
    for v, e in mono:
        v = Var(Kind(v[0]), v[1]).validate()
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponent must be a non-negative int, got {e!r}")
        if e > _MAX_DEGREE:
            raise OverflowError("exponent too large")
        packed += e * _unit(v)
        deg += e
    if deg > _MAX_DEGREE:
        raise OverflowError("degree too large")
    return packed, deg


def _divides(a: int, b: int) -> bool:
    """True if packed monomial ``a`` divides ``b``."""
    while a:
        if (a & _MASK) > (b & _MASK):
            return False
        a >>= _BITS
        b >>= _BITS
    return True


def _mono_key(m: int) -> tuple:
    mono = _decode(m)
    return (-sum(e for _, e in mono), tuple((v, -e) for v, e in mono))


PolyLike = Union["Poly", int, Var]


class Poly:
    """Immutable polynomial with integer coefficients.

    Build from ``{monomial: coeff}`` where a monomial is an iterable of
    ``(Var, exponent)`` pairs, or use :func:`alpha`, :func:`xvar` and the
    arithmetic operators.
    """

    __slots__ = ("_t", "_deg", "_hash")

    def __init__(self, terms: Mapping[Iterable[tuple[Var, int]], int] | None = None) -> None:
        t: dict[int, int] = {}
        deg = 0
        for mono, c in (terms or {}).items():
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be ints, got {c!r}")
            packed, d = _encode(mono)
            t[packed] = t.get(packed, 0) + c
            deg = max(deg, d)
        self._t = {m: c for m, c in t.items() if c}
        self._deg = deg
        self._hash: int | None = None

    @classmethod
    def _raw(cls, t: dict[int, int], deg: int) -> Poly:
        p = object.__new__(cls)
        p._t = t
        p._deg = deg
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls._raw({0: c} if c else {}, 0)

    @classmethod
    def var(cls, v: Var) -> Poly:
        v = Var(Kind(v[0]), v[1]).validate()
        return cls._raw({_unit(v): 1}, 1)

    @staticmethod
    def coerce(p: PolyLike) -> Poly:
        if isinstance(p, Poly):
            return p
        if isinstance(p, bool):
            raise TypeError("bool is not a polynomial")
        if isinstance(p, int):
            return Poly.const(p)
        if isinstance(p, Var):
            return Poly.var(p)
        raise TypeError(f"cannot convert {type(p).__name__} to Poly")

    # -- inspection -------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._t)

    def __len__(self) -> int:
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_term(self) -> int:
        return self._t.get(0, 0)

    def as_int(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.constant_term()

    def terms(self) -> list[tuple[tuple[tuple[Var, int], ...], int]]:
        """Terms in canonical (graded lexicographic) order."""
        return [(_decode(m), self._t[m]) for m in sorted(self._t, key=_mono_key)]

    def __iter__(self) -> Iterator[tuple[tuple[tuple[Var, int], ...], int]]:
        return iter(self.terms())

    def variables(self) -> set[Var]:
        return {v for m in self._t for v, _ in _decode(m)}

    def degree(self, kinds: Iterable[Kind] | None = None) -> int:
        """Maximum total degree, counting only variables of ``kinds`` if given."""
        ks = None if kinds is None else set(kinds)
        best = -1 if self._t else 0
        for m in self._t:
            best = max(best, sum(e for v, e in _decode(m) if ks is None or v.kind in ks))
        return max(best, 0)

    def is_homogeneous(self, degree: int, kinds: Iterable[Kind] | None = None) -> bool:
        ks = None if kinds is None else set(kinds)
        return all(
            sum(e for v, e in _decode(m) if ks is None or v.kind in ks) == degree for m in self._t
        )

    def coefficient(self, mono: Iterable[tuple[Var, int]]) -> int:
        return self._t.get(_encode(mono)[0], 0)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: PolyLike) -> Poly:
        try:
            o = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        if len(o._t) > len(self._t):
            a, b = o, self
        else:
            a, b = self, o
        t = dict(a._t)
        for m, c in b._t.items():
            s = t.get(m, 0) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return Poly._raw(t, max(a._deg, b._deg))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw({m: -c for m, c in self._t.items()}, self._deg)

    def __pos__(self) -> Poly:
        return self

    def __sub__(self, other: PolyLike) -> Poly:
        try:
            o = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: PolyLike) -> Poly:
        return Poly.coerce(other) - self

    def __mul__(self, other: PolyLike) -> Poly:
        try:
            o = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        if not self._t or not o._t:
            return Poly.const(0)
        deg = self._deg + o._deg
        if deg > _MAX_DEGREE:
            raise OverflowError("product degree exceeds packed exponent width")
        a, b = (self._t, o._t) if len(self._t) >= len(o._t) else (o._t, self._t)
        if len(b) == 1:
            ((mb, cb),) = b.items()
            return Poly._raw({m + mb: c * cb for m, c in a.items()}, deg)
        t: dict[int, int] = {}
        get = t.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                k = ma + mb
                t[k] = get(k, 0) + ca * cb
        return Poly._raw({m: c for m, c in t.items() if c}, deg)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative int")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: int) -> Poly:
        if not c:
            return Poly.const(0)
        return Poly._raw({m: v * c for m, v in self._t.items()}, self._deg)

    def divide_exact(self, other: PolyLike) -> Poly:
        """Exact quotient ``self / other``; raises ArithmeticError if not exact."""
        d = Poly.coerce(other)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = min(d._t, key=_mono_key)
        lc = d._t[lead]
        rem = self
        q: dict[int, int] = {}
        while rem._t:
            m = min(rem._t, key=_mono_key)
            c = rem._t[m]
            if not _divides(lead, m) or c % lc:
                raise ArithmeticError("polynomial division is not exact")
            qm, qc = m - lead, c // lc
            q[qm] = q.get(qm, 0) + qc
            rem = rem - Poly._raw({qm: qc}, rem._deg) * d
        return Poly._raw({m: c for m, c in q.items() if c}, self._deg)

    # -- structure --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._t == other._t
        if isinstance(other, int) and not isinstance(other, bool):
            return self._t == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def map_vars(self, f: Callable[[Var], PolyLike | None]) -> Poly:
        """Substitute every variable ``v`` by ``f(v)`` (``None`` keeps ``v``)."""
        images: dict[int, Poly] = {}
        cache: dict[int, Poly] = {}
        result = Poly.const(0)
        for m, c in self._t.items():
            term = Poly.const(c)
            for v, e in _decode(m):
                s = _slot(v)
                if s not in images:
                    img = f(v)
                    images[s] = Poly.var(v) if img is None else Poly.coerce(img)
                key = (s << 20) | e
                pw = cache.get(key)
                if pw is None:
                    pw = cache[key] = images[s] ** e
                term = term * pw
            result = result + term
        return result

    def rename(self, f: Callable[[Var], Var]) -> Poly:
        """Apply a variable renaming; faster than :meth:`map_vars` for bijections."""
        t: dict[int, int] = {}
        for m, c in self._t.items():
            packed = 0
            for v, e in _decode(m):
                packed += e * _unit(f(v))
            t[packed] = t.get(packed, 0) + c
        return Poly._raw({m: c for m, c in t.items() if c}, self._deg)

    # -- rendering --------------------------------------------------------

    def _render(self, var: Callable[[Var], str], mul: str, power: Callable[[str, int], str]) -> str:
        if not self._t:
            return "0"
        pieces = []
        for mono, c in self.terms():
            factors = [var(v) if e == 1 else power(var(v), e) for v, e in mono]
            mag = abs(c)
            if factors:
                body = mul.join(factors)
                if mag != 1:
                    body = f"{mag}{mul}{body}" if mul.strip() else f"{mag}{body}"
            else:
                body = str(mag)
            pieces.append(("-" if c < 0 else "+", body))
        head_sign, head = pieces[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self._render(Var.text, "*", lambda b, e: f"{b}^{e}")

    def __repr__(self) -> str:
        return f"Poly({self})"

    def latex(self) -> str:
        return self._render(Var.latex, " ", lambda b, e: f"{b}^{{{e}}}")

    def to_json(self) -> dict:
        return {
            "terms": [
                {"c": str(c), "m": [[_KIND_TAG[v.kind], v.index, e] for v, e in mono]}
                for mono, c in self.terms()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Poly:
        terms: dict[tuple, int] = {}
        for term in data["terms"]:
            mono = tuple((Var(_TAG_KIND[tag], int(i)), int(e)) for tag, i, e in term["m"])
            terms[mono] = terms.get(mono, 0) + int(term["c"])
        return cls(terms)


# -- constructors ---------------------------------------------------------


def alpha(i: int) -> Poly:
    return Poly.var(Var(Kind.ALPHA, i))


def xvar(i: int) -> Poly:
    return Poly.var(Var(Kind.X, i))


def yvar(i: int) -> Poly:
    return Poly.var(Var(Kind.Y, i))


def hvar(i: int) -> Poly:
    """Generic classical complete function ``h_i`` (``h_0 = 1``, negative gives 0)."""
    if i < 0:
        return Poly.const(0)
    if i == 0:
        return Poly.const(1)
    return Poly.var(Var(Kind.H, i))


# -- ring operations --------------------------------------------------------


def poly_arith(op: str, p: PolyLike, q: PolyLike) -> Poly:
    p, q = Poly.coerce(p), Poly.coerce(q)
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def shift_alpha(p: PolyLike, m: int) -> Poly:
    """Apply σ^m: ``α_i -> α_{i+m}``."""
    p = Poly.coerce(p)
    if m == 0:
        return p
    return p.rename(lambda v: Var(v.kind, v.index + m) if v.kind == Kind.ALPHA else v)


def iota_alpha(p: PolyLike) -> Poly:
    """Apply ι: ``α_i -> α_{1-i}``."""
    return Poly.coerce(p).rename(lambda v: Var(v.kind, 1 - v.index) if v.kind == Kind.ALPHA else v)


def _signed(items: Iterable) -> tuple[Poly, ...]:
    out = []
    for it in items:
        if isinstance(it, tuple) and not isinstance(it, Var) and len(it) == 2:
            v, sign = it
            if sign not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {sign!r}")
            out.append(Poly.coerce(v) * sign)
        else:
            out.append(Poly.coerce(it))
    return tuple(out)


def _monomials(vals: tuple[Poly, ...]) -> list[tuple[int, int]] | None:
    """``(packed monomial, coeff)`` per value if every value is a single term."""
    out = []
    for v in vals:
        if len(v._t) != 1:
            return None
        out.append(next(iter(v._t.items())))
    return out


def _from_choices(mons: list[tuple[int, int]], choices: Iterable[tuple[int, ...]], deg: int) -> Poly:
    t: dict[int, int] = {}
    for combo in choices:
        m, c = 0, 1
        for i in combo:
            mi, ci = mons[i]
            m += mi
            c *= ci
        t[m] = t.get(m, 0) + c
    return Poly._raw({m: c for m, c in t.items() if c}, deg)


@lru_cache(maxsize=1 << 15)
def _elem(vals: tuple[Poly, ...], k: int) -> Poly:
    if k < 0 or k > len(vals):
        return Poly.const(0)
    mons = _monomials(vals)
    if mons is not None:
        deg = k * max((v._deg for v in vals), default=0)
        return _from_choices(mons, itertools.combinations(range(len(vals)), k), deg)
    row = [Poly.const(1)] + [Poly.const(0)] * k
    for n, v in enumerate(vals, 1):
        for j in range(min(n, k), 0, -1):
            row[j] = row[j] + v * row[j - 1]
    return row[k]


@lru_cache(maxsize=1 << 15)
def _homog(vals: tuple[Poly, ...], k: int) -> Poly:
    if k < 0:
        return Poly.const(0)
    if k == 0:
        return Poly.const(1)
    mons = _monomials(vals)
    if mons is not None:
        choices = itertools.combinations_with_replacement(range(len(vals)), k)
        return _from_choices(mons, choices, k * max((v._deg for v in vals), default=0))
    row = [Poly.const(1)] + [Poly.const(0)] * k
    for v in vals:
        for j in range(1, k + 1):
            row[j] = row[j] + v * row[j - 1]
    return row[k]


def elem_sym(items: Iterable, k: int) -> Poly:
    """``e_k`` of a list of ``(Var, sign)`` pairs (Polys and ints also accepted)."""
    return _elem(_signed(items), k)


def homog_sym(items: Iterable, k: int) -> Poly:
    """``h_k`` of a list of ``(Var, sign)`` pairs (Polys and ints also accepted)."""
    return _homog(_signed(items), k)


@lru_cache(maxsize=1 << 16)
def e_alpha(k: int, lo: int, hi: int, sign: int = -1) -> Poly:
    """``e_k(sign·α_lo, ..., sign·α_hi)``; empty when ``hi < lo``."""
    return _elem(tuple(alpha(i) * sign for i in range(lo, hi + 1)), k)


@lru_cache(maxsize=1 << 16)
def h_alpha(k: int, lo: int, hi: int, sign: int = 1) -> Poly:
    """``h_k(sign·α_lo, ..., sign·α_hi)``; empty when ``hi < lo``."""
    return _homog(tuple(alpha(i) * sign for i in range(lo, hi + 1)), k)


_FACTOR_PRIORITY = {Kind.X: 0, Kind.Y: 1, Kind.H: 2, Kind.ALPHA: 3}


def linear_factors(p: PolyLike) -> tuple[Poly, list[Poly]]:
    """Split off factors ``v``, ``v + w`` and ``v - w`` in the variables of ``p``.

    Returns ``(cofactor, factors)`` with ``p == cofactor * ∏ factors``.  This
    is trial division, meant for display, not a complete factorization.
    """
    rest = Poly.coerce(p)
    found: list[Poly] = []
    if rest.is_constant():
        return rest, found
    vs = sorted(rest.variables(), key=lambda v: (_FACTOR_PRIORITY[v.kind], v.index))
    cands = [Poly.var(v) for v in vs]
    for i, v in enumerate(vs):
        for w in vs[i + 1 :]:
            cands += [Poly.var(v) + Poly.var(w), Poly.var(v) - Poly.var(w)]
    for cand in cands:
        while not rest.is_constant():
            try:
                rest = rest.divide_exact(cand)
            except ArithmeticError:
                break
            found.append(cand)
    return rest, found


def _linear_latex(f: Poly) -> str:
    """A linear form with its ``x``/``y`` terms first."""
    terms = sorted(f.terms(), key=lambda t: (_FACTOR_PRIORITY[t[0][0][0].kind], t[0][0][0].index))
    out = ""
    for i, (((v, _),), c) in enumerate(terms):
        name = v.latex() if abs(c) == 1 else f"{abs(c)} {v.latex()}"
        if i == 0:
            out = ("-" if c < 0 else "") + name
        else:
            out += (" - " if c < 0 else " + ") + name
    return out


def factored_latex(p: PolyLike) -> str:
    """LaTeX for ``p`` with any linear factors pulled out."""
    rest, factors = linear_factors(p)
    if not factors:
        return Poly.coerce(p).latex()
    body = "".join(f"({_linear_latex(f)})" for f in factors)
    if rest == 1:
        return body
    if rest == -1:
        return "-" + body
    return f"({rest.latex()}){body}"


def specialize(p: PolyLike, assignment: Mapping[Var, PolyLike | Fraction]) -> Poly:
    """Simultaneous substitution of variables.

    Values may be Polys, ints or Fractions that are integral.  A value that
    mentions an assigned variable is a cyclic substitution and is rejected.
    """
    p = Poly.coerce(p)
    if not assignment:
        return p
    images: dict[Var, Poly] = {}
    for v, val in assignment.items():
        v = Var(Kind(v[0]), v[1]).validate()
        if isinstance(val, Fraction):
            if val.denominator != 1:
                raise ValueError("non-integral rational values are not supported over the integers")
            val = int(val)
        images[v] = Poly.coerce(val)
    for v, img in images.items():
        clash = img.variables() & images.keys()
        if clash:
            raise ValueError(f"cyclic substitution: value for {v.text()} mentions {sorted(clash)[0].text()}")
    return p.map_vars(images.get)
