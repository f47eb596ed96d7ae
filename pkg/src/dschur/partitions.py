"""Integer partitions and the skew-shape predicates used by the expansion rules."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from functools import lru_cache

__all__ = [
    "Partition",
    "partitions_of",
    "partitions_up_to",
    "subpartitions",
    "is_horizontal_strip",
    "is_vertical_strip",
    "skew_cells",
    "ribbon_height",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers; trailing zeros are dropped."""

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        ps = list(parts)
        for p in ps:
            if not isinstance(p, int) or isinstance(p, bool):
                raise TypeError(f"partition parts must be ints, got {p!r}")
        while ps and ps[-1] == 0:
            ps.pop()
        for a, b in zip(ps, ps[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {tuple(ps)}")
        if ps and ps[-1] < 0:
            raise ValueError(f"parts must be non-negative: {tuple(ps)}")
        return super().__new__(cls, ps)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """``λ_i`` with 1-based ``i``; zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p >= c) for c in range(1, self[0] + 1))

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells ``(row, col)``, 1-based, row by row."""
        for r, p in enumerate(self, 1):
            for c in range(1, p + 1):
                yield r, c

    def contains(self, other: Iterable[int]) -> bool:
        o = Partition(other)
        return len(o) <= len(self) and all(a >= b for a, b in zip(self, o))

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        if not self:
            return "()"
        if all(p < 10 for p in self):
            return "".join(map(str, self))
        return ",".join(map(str, self))


@lru_cache(maxsize=None)
def _parts(n: int, cap: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _parts(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int, max_length: int | None = None) -> list[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    return [Partition(p) for p in _parts(n, n) if max_length is None or len(p) <= max_length]


def partitions_up_to(n: int, max_length: int | None = None) -> list[Partition]:
    return [p for m in range(n + 1) for p in partitions_of(m, max_length)]


def subpartitions(lam: Iterable[int]) -> list[Partition]:
    """All ``μ ⊆ λ``."""
    lam = Partition(lam)
    out: list[Partition] = []

    def rec(i: int, cap: int, acc: list[int]) -> None:
        if i == len(lam):
            out.append(Partition(acc))
            return
        for v in range(min(cap, lam[i]), -1, -1):
            rec(i + 1, v, acc + [v])

    rec(0, lam[0] if lam else 0, [])
    return out


def skew_cells(lam: Iterable[int], mu: Iterable[int]) -> list[tuple[int, int]]:
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    return [(r, c) for r, c in lam.cells() if c > mu.part(r)]


def is_horizontal_strip(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """``μ ⊆ λ`` with at most one cell of ``λ/μ`` per column."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return False
    return all(mu.part(i) >= lam.part(i + 1) for i in range(1, len(lam) + 1))


def is_vertical_strip(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """``μ ⊆ λ`` with at most one cell of ``λ/μ`` per row."""
    lam, mu = Partition(lam), Partition(mu)
    return lam.contains(mu) and all(lam.part(i) - mu.part(i) <= 1 for i in range(1, len(lam) + 1))


def ribbon_height(lam: Iterable[int], mu: Iterable[int]) -> int | None:
    """Rows spanned minus one if ``λ/μ`` is a non-empty ribbon, else None.

    A ribbon is an edge-connected skew shape containing no 2x2 square.
    """
    cells = set(skew_cells(lam, mu))
    if not cells:
        return None
    if any({(r, c), (r + 1, c), (r, c + 1), (r + 1, c + 1)} <= cells for r, c in cells):
        return None
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if seen != cells:
        return None
    rows = {r for r, _ in cells}
    return max(rows) - min(rows)
