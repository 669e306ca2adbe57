"""Pragacz-Ratajski Q~ and P~ polynomials evaluated at complex points.

Also builds the root-of-unity index sets used to write down the quantum
eigenbases.  Index tuples are stored with doubled entries so that integer and
half-integer exponents are handled in exact integer arithmetic.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product

import numpy as np

from .combinatorics import BoundError, Partition, ShapeError, is_partition, length, normalize

MAX_INDEX_N = 14
MAX_PFAFFIAN_SIZE = 16
RECURSION_MAX_SIZE = 10


def elementary_symmetric_all(X) -> list[complex]:
    """``[E_0(X), ..., E_n(X)]`` by the product-expansion recurrence."""
    e = [1 + 0j] + [0j] * len(X)
    for i, x in enumerate(X, start=1):
        for k in range(i, 0, -1):
            e[k] += x * e[k - 1]
    return e


def elementary_symmetric(k: int, X) -> complex:
    if k < 0 or k > len(X):
        return 0j
    return elementary_symmetric_all(X)[k]


def _two_row(i: int, j: int, e: list[complex]) -> complex:
    def E(m):
        return e[m] if 0 <= m < len(e) else 0j

    total = E(i) * E(j)
    for k in range(1, j + 1):
        total += 2 * (-1) ** k * E(i + k) * E(j - k)
    return total


def qtilde_two_row(i: int, j: int, X) -> complex:
    """``Q~_{i,j}(X) = E_i E_j + 2 sum_{k=1}^{j} (-1)^k E_{i+k} E_{j-k}`` for ``i >= j >= 0``."""
    if not i >= j >= 0:
        raise ValueError(f"qtilde_two_row needs i >= j >= 0, got ({i}, {j})")
    return _two_row(i, j, elementary_symmetric_all(X))


def _pfaffian_recursive(B: list[list[complex]], idx: tuple[int, ...]) -> complex:
    if not idx:
        return 1 + 0j
    first, rest = idx[0], idx[1:]
    total = 0j
    for pos, j in enumerate(rest):
        b = B[first][j]
        if b == 0:
            continue
        sign = -1 if pos % 2 else 1
        total += sign * b * _pfaffian_recursive(B, rest[:pos] + rest[pos + 1:])
    return total


def pfaffian_recursive(B) -> complex:
    """Pfaffian by expansion along the first row."""
    B = np.asarray(B, dtype=complex)
    _check_skew_shape(B)
    return _pfaffian_recursive(B.tolist(), tuple(range(B.shape[0])))


def pfaffian_elimination(B) -> complex:
    """Pfaffian by skew-symmetric Gaussian elimination with partial pivoting."""
    A = np.array(B, dtype=complex)
    _check_skew_shape(A)
    r = A.shape[0]
    pf = 1 + 0j
    for k in range(0, r - 1, 2):
        kp = k + 1 + int(np.argmax(np.abs(A[k + 1:, k])))
        if kp != k + 1:
            A[[k + 1, kp], :] = A[[kp, k + 1], :]
            A[:, [k + 1, kp]] = A[:, [kp, k + 1]]
            pf = -pf
        if A[k + 1, k] == 0:
            return 0j
        pf *= A[k, k + 1]
        if k + 2 < r:
            tau = A[k, k + 2:] / A[k, k + 1]
            col = A[k + 2:, k + 1].copy()
            A[k + 2:, k + 2:] += np.outer(tau, col) - np.outer(col, tau)
    return complex(pf)


def pfaffian(B, method: str = "auto") -> complex:
    """Pfaffian of an even-size skew-symmetric matrix; the 0x0 Pfaffian is 1.

    ``method`` is ``"recursive"``, ``"elimination"`` or ``"auto"`` (recursion
    up to size 10).
    """
    B = np.asarray(B, dtype=complex)
    _check_skew_shape(B)
    r = B.shape[0]
    if r > MAX_PFAFFIAN_SIZE:
        raise BoundError(f"Pfaffian size {r} exceeds {MAX_PFAFFIAN_SIZE}")
    if method == "auto":
        method = "recursive" if r <= RECURSION_MAX_SIZE else "elimination"
    if method == "recursive":
        return _pfaffian_recursive(B.tolist(), tuple(range(r)))
    if method == "elimination":
        return pfaffian_elimination(B)
    raise ValueError(f"unknown Pfaffian method {method!r}")


def _check_skew_shape(B: np.ndarray) -> None:
    if B.ndim != 2 or B.shape[0] != B.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {B.shape}")
    if B.shape[0] % 2:
        raise ShapeError(f"Pfaffian needs even size, got {B.shape[0]}")


def _padded(lam: Partition) -> Partition:
    return lam + (0,) if len(lam) % 2 else lam


def _check_lambda(lam, X) -> Partition:
    lam = normalize(lam)
    if not is_partition(lam):
        raise ShapeError(f"{lam} is not a partition")
    if lam and lam[0] > len(X):
        raise ShapeError(f"largest part {lam[0]} exceeds number of variables {len(X)}")
    return lam


def skew_matrix(lam: Partition, X) -> np.ndarray:
    """``B_lambda``: entries ``Q~_{lam_i, lam_j}(X)`` above the diagonal, padded to even size."""
    lam = _padded(_check_lambda(lam, X))
    e = elementary_symmetric_all(X)
    r = len(lam)
    B = np.zeros((r, r), dtype=complex)
    for a in range(r):
        for b in range(a + 1, r):
            B[a, b] = _two_row(lam[a], lam[b], e)
            B[b, a] = -B[a, b]
    return B


def qtilde(lam, X) -> complex:
    """``Q~_lambda(X)`` as the Pfaffian of ``B_lambda``."""
    return pfaffian(skew_matrix(lam, X))


def ptilde(lam, X) -> complex:
    """``P~_lambda(X) = 2^{-l(lambda)} Q~_lambda(X)``."""
    lam = _check_lambda(lam, X)
    return qtilde(lam, X) / 2 ** length(lam)


class PointEvaluator:
    """Memoized Q~/P~ evaluation at one fixed point.

    Expands the Pfaffian along its first row and caches every sub-Pfaffian by
    its (padded) index tuple, so evaluating all of a basis shares work.
    """

    def __init__(self, X):
        self.X = tuple(complex(x) for x in X)
        self.e = elementary_symmetric_all(self.X)
        self._two: dict[tuple[int, int], complex] = {}
        self._pf: dict[Partition, complex] = {(): 1 + 0j}

    def E(self, k: int) -> complex:
        return self.e[k] if 0 <= k < len(self.e) else 0j

    def two_row(self, i: int, j: int) -> complex:
        key = (i, j)
        if key not in self._two:
            self._two[key] = _two_row(i, j, self.e)
        return self._two[key]

    def _pfaff(self, parts: Partition) -> complex:
        if parts in self._pf:
            return self._pf[parts]
        first, rest = parts[0], parts[1:]
        total = 0j
        for pos, p in enumerate(rest):
            b = self.two_row(first, p)
            if b == 0:
                continue
            sign = -1 if pos % 2 else 1
            total += sign * b * self._pfaff(rest[:pos] + rest[pos + 1:])
        self._pf[parts] = total
        return total

    def qtilde(self, lam) -> complex:
        lam = _check_lambda(lam, self.X)
        return self._pfaff(_padded(lam))

    def ptilde(self, lam) -> complex:
        lam = _check_lambda(lam, self.X)
        return self._pfaff(_padded(lam)) / 2 ** length(lam)


@dataclass(frozen=True, order=True)
class IndexTuple:
    """A strictly increasing exponent tuple ``J``; ``twice[k] = 2 * j_k``."""

    n: int
    twice: tuple[int, ...]

    @cached_property
    def entries(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(t, 2) for t in self.twice)

    def __str__(self):
        return "(" + ",".join(str(j) for j in self.entries) + ")"

    def exponent_sum_twice(self) -> int:
        return sum(self.twice)

    def has_antipodal_pair(self) -> bool:
        # zeta^a = -zeta^b  <=>  a - b = n (mod 2n); in doubled units mod 4n
        residues = [t % (4 * self.n) for t in self.twice]
        shift = 2 * self.n
        return any((a - b) % (4 * self.n) == shift for a, b in combinations(residues, 2))

    def product_is_one(self) -> bool:
        return self.exponent_sum_twice() % (4 * self.n) == 0


def _window_twice(n: int) -> list[int]:
    """Doubled values of the allowed exponent range for ``T_n`` (2n values)."""
    if n % 2:
        m = (n - 1) // 2
        return [2 * j for j in range(-m, 3 * m + 2)]
    m = n // 2
    return list(range(-2 * m + 1, 6 * m, 2))


def _check_index_n(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_INDEX_N:
        raise BoundError(f"n must be an integer in [1, {MAX_INDEX_N}], got {n!r}")


def iter_T(n: int):
    """Lazily enumerate ``T_n``: all n-subsets of the exponent window."""
    _check_index_n(n)
    for c in combinations(_window_twice(n), n):
        yield IndexTuple(n, c)


def index_set_I(n: int) -> list[IndexTuple]:
    """``I_n``: members of ``T_n`` with no two antipodal coordinates.

    The window holds each residue mod 2n once, so it splits into n antipodal
    pairs ``{v, v+n}``; ``I_n`` picks exactly one from each pair.
    """
    _check_index_n(n)
    w = _window_twice(n)
    pairs = [(w[i], w[i + n]) for i in range(n)]
    out = [IndexTuple(n, tuple(sorted(choice))) for choice in product(*pairs)]
    return sorted(out)


@dataclass(frozen=True)
class IndexSets:
    n: int
    T: list[IndexTuple] | None
    I: list[IndexTuple]
    I_even: list[IndexTuple]


def index_sets(n: int, include_T: bool = False) -> IndexSets:
    """The sets ``T_n``, ``I_n`` and ``I_n^e``, each sorted.

    ``T_n`` has C(2n, n) elements and is only materialized on request; when
    it is, ``I_n`` is obtained by filtering it directly.
    """
    _check_index_n(n)
    if include_T:
        T = list(iter_T(n))
        I = [J for J in T if not J.has_antipodal_pair()]
    else:
        T = None
        I = index_set_I(n)
    I_even = [J for J in I if J.product_is_one()]
    return IndexSets(n, T, I, I_even)


def zeta(n: int) -> complex:
    return cmath.exp(1j * math.pi / n)


def zeta_point(J: IndexTuple, scale: float = 1.0) -> tuple[complex, ...]:
    """``scale * (zeta^{j_1}, ..., zeta^{j_n})`` with ``zeta = exp(pi i / n)``."""
    return tuple(scale * cmath.exp(1j * math.pi * t / (2 * J.n)) for t in J.twice)
