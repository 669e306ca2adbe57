"""Quantum cohomology of LG(n) and OG(n) on the Schubert basis.

Products are returned as ``{(mu, d): coeff}`` where ``d`` is the power of
``q``.  Operator matrices specialize ``q = 1`` and use the column order of
:func:`~schubertq.combinatorics.enumerate_basis`.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .combinatorics import (
    Partition,
    basis_index,
    check_strict,
    enumerate_basis,
    horizontal_strips_down,
    horizontal_strips_up,
    is_strict,
    pieri_exponent_n,
    pieri_exponent_n_prime,
    weight,
)

SPACES = ("lg", "og")
QuantumProduct = dict[tuple[Partition, int], int]


def _check_space(space: str) -> str:
    space = space.lower()
    if space not in SPACES:
        raise ValueError(f"space must be one of {SPACES}, got {space!r}")
    return space


def _check_k(k: int, n: int) -> None:
    if not isinstance(k, (int, np.integer)) or not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}, got {k!r}")


def q_degree(space: str, n: int) -> int:
    """Cohomological degree of ``q``: n+1 for LG, 2n for OG."""
    return n + 1 if _check_space(space) == "lg" else 2 * n


def fano_index(space: str, n: int) -> int:
    return q_degree(space, n)


def dimension(n: int) -> int:
    return n * (n + 1) // 2


def pieri_lg(k: int, lam, n: int) -> QuantumProduct:
    """``sigma_k * sigma_lam`` in the quantum cohomology of LG(n)."""
    _check_k(k, n)
    lam = check_strict(lam, n)
    out: QuantumProduct = {}
    for mu in horizontal_strips_up(lam, k, n):
        if is_strict(mu, n):
            out[(mu, 0)] = 2 ** pieri_exponent_n(lam, mu)
    for nu in horizontal_strips_down(lam, n + 1 - k):
        if is_strict(nu, n):
            out[(nu, 1)] = 2 ** pieri_exponent_n_prime(nu, lam)
    return out


def pieri_og(k: int, lam, n: int) -> QuantumProduct:
    """``tau_k * tau_lam`` in the quantum cohomology of OG(n).

    Strips reaching two rows of length n drop those rows and pick up one q.
    """
    _check_k(k, n)
    lam = check_strict(lam, n)
    out: QuantumProduct = defaultdict(int)
    for mu in horizontal_strips_up(lam, k, n):
        coeff = 2 ** pieri_exponent_n_prime(lam, mu)
        if is_strict(mu, n):
            out[(mu, 0)] += coeff
        elif len(mu) >= 2 and mu[0] == mu[1] == n and is_strict(mu[2:], n):
            out[(mu[2:], 1)] += coeff
    return dict(out)


def pieri(space: str, k: int, lam, n: int) -> QuantumProduct:
    return pieri_lg(k, lam, n) if _check_space(space) == "lg" else pieri_og(k, lam, n)


def at_q1(product: QuantumProduct) -> dict[Partition, int]:
    merged: dict[Partition, int] = defaultdict(int)
    for (mu, _), c in product.items():
        merged[mu] += c
    return dict(merged)


def format_product(space: str, product: QuantumProduct) -> str:
    """Render a product like ``sigma(2,1) + q`` or ``2*tau(2)``."""
    name = "sigma" if _check_space(space) == "lg" else "tau"
    if not product:
        return "0"
    terms = []
    for (mu, d), c in sorted(product.items(), key=lambda t: (t[0][1], weight(t[0][0]), t[0][0])):
        factors = []
        if mu:
            factors.append(f"{name}({','.join(map(str, mu))})")
        if d:
            factors.append("q" if d == 1 else f"q^{d}")
        body = "*".join(factors) if factors else "1"
        terms.append(body if c == 1 else f"{c}*{body}")
    return " + ".join(terms)


@dataclass(frozen=True)
class OperatorMatrix:
    """Exact integer matrix of a quantum multiplication operator at q = 1.

    Column ``j`` holds the image of the ``j``-th basis class.
    """

    space: str
    n: int
    entries: np.ndarray

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def basis(self) -> list[Partition]:
        return enumerate_basis(self.n)

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)


def operator_matrix(space: str, n: int, k: int) -> OperatorMatrix:
    """Matrix of ``[sigma_k]`` (LG) or ``[tau_k]`` (OG) with q = 1."""
    space = _check_space(space)
    _check_k(k, n)
    basis = enumerate_basis(n)
    index = basis_index(n)
    M = np.zeros((len(basis), len(basis)), dtype=np.int64)
    for j, lam in enumerate(basis):
        for mu, c in at_q1(pieri(space, k, lam, n)).items():
            M[index[mu], j] += c
    M.setflags(write=False)
    return OperatorMatrix(space, n, M)


def c1_matrix(space: str, n: int) -> OperatorMatrix:
    """``[c_1]``: ``(n+1)[sigma_1]`` on LG(n), ``2n[tau_1]`` on OG(n)."""
    space = _check_space(space)
    base = operator_matrix(space, n, 1).entries
    M = q_degree(space, n) * base
    M.setflags(write=False)
    return OperatorMatrix(space, n, M)


def is_irreducible(M) -> bool:
    """Strong connectivity of the nonzero pattern of a square matrix."""
    A = np.asarray(M) != 0
    size = A.shape[0]

    def reach(adj):
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in np.flatnonzero(adj[i]):
                if j not in seen:
                    seen.add(int(j))
                    stack.append(int(j))
        return len(seen) == size

    return reach(A) and reach(A.T)


def _special_classes(space: str, n: int) -> dict[int, np.ndarray]:
    """Matrices of the single-row classes with q = 1; index 0 is the identity."""
    dim = 2 ** n
    mats = {0: np.eye(dim, dtype=np.int64)}
    for k in range(1, n + 1):
        mats[k] = operator_matrix(space, n, k).entries
    return mats


def check_ring_relations(space: str, n: int) -> list[tuple[str, np.ndarray]]:
    """Residual matrices of the defining relations of the quantum ring at q = 1.

    Each relation ``lhs = rhs`` is returned as ``(label, lhs - rhs)``; all
    residuals vanish exactly when the Pieri matrices satisfy the presentation.
    Single-row classes with index outside ``0..n`` are zero.
    """
    space = _check_space(space)
    if not 1 <= n <= 10:
        raise ValueError(f"n must lie in 1..10, got {n}")
    mats = _special_classes(space, n)
    zero = np.zeros_like(mats[0])

    def s(j: int) -> np.ndarray:
        return mats.get(j, zero) if j >= 0 else zero

    out = []
    if space == "lg":
        for i in range(1, n + 1):
            lhs = s(i) @ s(i)
            for k in range(1, n - i + 1):
                lhs = lhs + 2 * (-1) ** k * (s(i + k) @ s(i - k))
            rhs = (-1) ** (n - i) * s(2 * i - n - 1)
            out.append((f"sigma_{i}^2 relation", lhs - rhs))
    else:
        for i in range(1, n):
            lhs = s(i) @ s(i)
            for k in range(1, i):
                lhs = lhs + 2 * (-1) ** k * (s(i + k) @ s(i - k))
            lhs = lhs + (-1) ** i * s(2 * i)
            out.append((f"tau_{i},{i} = 0", lhs))
        out.append((f"tau_{n}^2 = q", s(n) @ s(n) - mats[0]))
    return out
