"""Strict partitions, complements and skew-diagram bookkeeping.

Partitions are plain tuples of positive integers with trailing zeros
stripped, e.g. ``(3, 1)``; the empty partition is ``()``.  Cells of a Young
diagram are addressed as ``(row, col)`` with both indices starting at 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

Partition = tuple[int, ...]

MAX_BASIS_N = 16


class BoundError(ValueError):
    """Raised when a size parameter lies outside the supported range."""


class ShapeError(ValueError):
    """Raised for malformed partitions or skew shapes."""


def normalize(parts) -> Partition:
    """Return ``parts`` as a tuple with trailing zeros removed."""
    out = [int(p) for p in parts]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def is_partition(parts: Partition, n: int | None = None) -> bool:
    if any(p < 0 for p in parts):
        return False
    if any(a < b for a, b in zip(parts, parts[1:])):
        return False
    return n is None or not parts or parts[0] <= n


def is_strict(parts: Partition, n: int | None = None) -> bool:
    """True if ``parts`` is a strict partition with largest part at most ``n``."""
    if any(p <= 0 for p in parts):
        return False
    if any(a <= b for a, b in zip(parts, parts[1:])):
        return False
    return n is None or not parts or parts[0] <= n


def check_strict(parts, n: int) -> Partition:
    lam = normalize(parts)
    if not is_strict(lam, n):
        raise ShapeError(f"{lam} is not a strict partition with parts <= {n}")
    return lam


def weight(parts: Partition) -> int:
    return sum(parts)


def length(parts: Partition) -> int:
    return sum(1 for p in parts if p > 0)


def _basis_key(lam: Partition):
    return (weight(lam), tuple(-p for p in lam))


def enumerate_basis(n: int) -> list[Partition]:
    """All strict partitions with parts in ``{1..n}``.

    Ordered by weight, then lexicographically descending within a weight, so
    the empty partition comes first and ``(n, n-1, ..., 1)`` last.
    """
    if not isinstance(n, int) or not 1 <= n <= MAX_BASIS_N:
        raise BoundError(f"n must be an integer in [1, {MAX_BASIS_N}], got {n!r}")
    subsets = [
        tuple(sorted(c, reverse=True))
        for size in range(n + 1)
        for c in combinations(range(1, n + 1), size)
    ]
    return sorted(subsets, key=_basis_key)


def basis_index(n: int) -> dict[Partition, int]:
    return {lam: i for i, lam in enumerate(enumerate_basis(n))}


def complement(lam: Partition, n: int) -> Partition:
    """Parts of ``{1..n}`` missing from ``lam``, in decreasing order."""
    lam = check_strict(lam, n)
    present = set(lam)
    return tuple(p for p in range(n, 0, -1) if p not in present)


@dataclass(frozen=True)
class SkewShape:
    """The skew diagram ``outer / inner``; requires ``inner`` inside ``outer``."""

    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        outer, inner = normalize(self.outer), normalize(self.inner)
        if not (is_partition(outer) and is_partition(inner)):
            raise ShapeError(f"not partitions: {outer}, {inner}")
        if len(inner) > len(outer) or any(a < b for a, b in zip(outer, inner)):
            raise ShapeError(f"{inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    def row_bounds(self):
        """Yield ``(row, inner_row, outer_row)`` for every nonempty row."""
        for i, o in enumerate(self.outer):
            a = self.inner[i] if i < len(self.inner) else 0
            if o > a:
                yield i + 1, a, o

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r, a, o in self.row_bounds() for c in range(a + 1, o + 1)]

    @property
    def size(self) -> int:
        return weight(self.outer) - weight(self.inner)


def is_horizontal_strip(s: SkewShape) -> bool:
    """At most one box per column, i.e. ``outer[i+1] <= inner[i]`` for all rows."""
    inner = s.inner + (0,) * (len(s.outer) - len(s.inner))
    return all(s.outer[i + 1] <= inner[i] for i in range(len(s.outer) - 1))


def component_counts(s: SkewShape) -> tuple[int, int]:
    """Connected components of ``s`` under edge-or-corner adjacency.

    Returns ``(components, components_off_first_column)``.
    """
    cells = set(s.cells())
    seen: set[tuple[int, int]] = set()
    total = off_first = 0
    for start in sorted(cells):
        if start in seen:
            continue
        total += 1
        touches_first = False
        stack = [start]
        seen.add(start)
        while stack:
            r, c = stack.pop()
            touches_first |= c == 1
            for dr in (-1, 0, 1):
                for dc in (-1, 0, 1):
                    nb = (r + dr, c + dc)
                    if nb in cells and nb not in seen:
                        seen.add(nb)
                        stack.append(nb)
        if not touches_first:
            off_first += 1
    return total, off_first


def pieri_exponent_n(inner: Partition, outer: Partition) -> int:
    """Components of ``outer/inner`` that avoid the first column."""
    return component_counts(SkewShape(outer, inner))[1]


def pieri_exponent_n_prime(inner: Partition, outer: Partition) -> int:
    """One less than the number of components of ``outer/inner``; 0 if empty."""
    total, _ = component_counts(SkewShape(outer, inner))
    return max(total - 1, 0)


def horizontal_strips_up(lam: Partition, k: int, bound: int):
    """Partitions ``mu`` with ``mu/lam`` a horizontal strip of size ``k`` and ``mu_1 <= bound``.

    ``mu`` need not be strict; callers filter.
    """
    lam = normalize(lam)
    rows = len(lam) + 1
    lam_ext = lam + (0,)

    def rec(i: int, remaining: int, prefix: list[int]):
        if i == rows:
            if remaining == 0:
                yield normalize(prefix)
            return
        lo = lam_ext[i]
        hi = bound if i == 0 else lam_ext[i - 1]
        for m in range(lo, min(hi, lo + remaining) + 1):
            yield from rec(i + 1, remaining - (m - lo), prefix + [m])

    if k < 0:
        return
    yield from rec(0, k, [])


def horizontal_strips_down(lam: Partition, k: int):
    """Partitions ``nu`` inside ``lam`` with ``lam/nu`` a horizontal strip of size ``k``."""
    lam = normalize(lam)
    lam_ext = lam + (0,)

    def rec(i: int, remaining: int, prefix: list[int]):
        if i == len(lam):
            if remaining == 0:
                yield normalize(prefix)
            return
        hi = lam[i]
        lo = lam_ext[i + 1]
        for v in range(hi, max(lo, hi - remaining) - 1, -1):
            yield from rec(i + 1, remaining - (hi - v), prefix + [v])

    if k < 0:
        return
    yield from rec(0, k, [])
