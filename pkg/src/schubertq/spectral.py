"""Eigentheory of the quantum multiplication operators at q = 1.

The simultaneous eigenvectors are written down in closed form from Q~/P~
values at scaled roots of unity, then checked against the exact Pieri
matrices.  The Perron root of ``[c_1]`` is computed independently by shifted
power iteration.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .combinatorics import Partition, basis_index, complement, enumerate_basis
from .qh import _check_space, c1_matrix, fano_index, operator_matrix
from .sympoly import IndexTuple, PointEvaluator, index_set_I, index_sets, zeta_point

DEFAULT_TOL = 1e-8


class IterationError(RuntimeError):
    """Power iteration did not converge; ``estimate`` holds the last value."""

    def __init__(self, message: str, estimate: float):
        super().__init__(message)
        self.estimate = estimate


@dataclass
class EigenPair:
    """A closed-form eigenvector with its eigenvalues under ``[sigma_k]``/``[tau_k]``.

    ``eigenvalues[k-1]`` belongs to the k-th special class; ``eigenvector`` is
    indexed like :func:`enumerate_basis`.
    """

    index: IndexTuple
    eigenvalues: tuple[complex, ...]
    eigenvector: np.ndarray
    c1_eigenvalue: complex

    def as_dict(self, n: int) -> dict[Partition, complex]:
        return dict(zip(enumerate_basis(n), self.eigenvector))


def lg_scale(n: int) -> float:
    return 0.5 ** (1.0 / (n + 1))


def og_scale(n: int) -> float:
    return 2.0 ** (1.0 / n)


def _eigenpair(n: int, J: IndexTuple, scale: float, use_p: bool, c1_coeff: int) -> EigenPair:
    ev = PointEvaluator(zeta_point(J, scale))
    basis = enumerate_basis(n)
    index = basis_index(n)
    vec = np.zeros(len(basis), dtype=complex)
    for nu in basis:
        val = ev.ptilde(nu) if use_p else ev.qtilde(nu)
        vec[index[complement(nu, n)]] = val
    factor = 0.5 if use_p else 1.0
    eigenvalues = tuple(factor * ev.E(k) for k in range(1, n + 1))
    return EigenPair(J, eigenvalues, vec, c1_coeff * eigenvalues[0])


def eigenbasis_lg(n: int) -> list[EigenPair]:
    """Eigenvectors ``sum_nu Q~_nu(delta zeta^I) sigma_{nu^}`` over ``I`` in ``I^e_{n+1}``."""
    if not 1 <= n <= 10:
        raise ValueError(f"n must lie in 1..10, got {n}")
    scale = lg_scale(n)
    return [_eigenpair(n, I, scale, False, n + 1) for I in index_sets(n + 1).I_even]


def eigenbasis_og(n: int) -> list[EigenPair]:
    """Eigenvectors ``sum_nu P~_nu(eps zeta^I) tau_{nu^}`` over ``I`` in ``I_n``."""
    if not 1 <= n <= 10:
        raise ValueError(f"n must lie in 1..10, got {n}")
    scale = og_scale(n)
    return [_eigenpair(n, I, scale, True, 2 * n) for I in index_set_I(n)]


def eigenbasis(space: str, n: int) -> list[EigenPair]:
    return eigenbasis_lg(n) if _check_space(space) == "lg" else eigenbasis_og(n)


def eigenvector_rank(pairs: list[EigenPair]) -> int:
    V = np.column_stack([p.eigenvector for p in pairs])
    return int(np.linalg.matrix_rank(V))


def verify_eigenpairs(space: str, n: int, tol: float = DEFAULT_TOL, pairs=None) -> float:
    """Largest relative residual ``|M_k v - lambda v|_inf / |v|_inf`` over all k and pairs.

    Raises ``AssertionError`` when it exceeds ``tol``.
    """
    space = _check_space(space)
    if not 1 <= n <= 8:
        raise ValueError(f"n must lie in 1..8, got {n}")
    if pairs is None:
        pairs = eigenbasis(space, n)
    worst = 0.0
    V = np.column_stack([p.eigenvector for p in pairs])
    scale = np.max(np.abs(V), axis=0)
    for k in range(1, n + 1):
        M = operator_matrix(space, n, k).entries.astype(float)
        lam = np.array([p.eigenvalues[k - 1] for p in pairs])
        R = M @ V - V * lam
        worst = max(worst, float(np.max(np.max(np.abs(R), axis=0) / scale)))
    if worst > tol:
        raise AssertionError(f"{space} n={n}: eigen-residual {worst:.3e} exceeds {tol:.1e}")
    return worst


def perron_root(M, tol: float = 1e-12, max_iter: int = 200_000, shift: float | None = None) -> float:
    """Dominant eigenvalue of a nonnegative irreducible matrix.

    Iterates ``M + shift*I`` from the all-ones vector; the shift removes the
    periodicity of graded operators.  Stops once the Collatz-Wielandt bounds
    ``min (Mx)_i/x_i <= rho <= max (Mx)_i/x_i`` are within ``tol`` (relative).
    """
    A = np.asarray(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("perron_root needs a square matrix")
    if (A < 0).any():
        raise ValueError("perron_root needs a nonnegative matrix")
    x = np.ones(A.shape[0])
    y = A @ x
    if shift is None:
        # geometric mean of the initial Collatz-Wielandt bounds
        shift = math.sqrt(max(y.min(), 1e-300) * y.max()) if y.max() > 0 else 1.0
    estimate = float(y.max())
    for _ in range(max_iter):
        y = A @ x
        ratios = y / x
        lo, hi = float(ratios.min()), float(ratios.max())
        estimate = 0.5 * (lo + hi)
        if hi - lo <= tol * max(1.0, abs(hi)):
            return estimate
        x = y + shift * x
        x /= x.max()
    raise IterationError(f"no convergence in {max_iter} iterations", estimate)


def delta0_closed_form(space: str, n: int) -> float:
    """Largest eigenvalue modulus of ``[c_1]`` from the closed formulas."""
    if _check_space(space) == "lg":
        return 2.0 ** (-1.0 / (n + 1)) * (n + 1) / math.sin(math.pi / (2 * (n + 1)))
    return 2.0 ** (1.0 / n) * n / math.sin(math.pi / (2 * n))


@dataclass
class Spectrum:
    space: str
    n: int
    values: np.ndarray
    delta0: float


def c1_spectrum(space: str, n: int) -> Spectrum:
    """The ``2^n`` eigenvalues of ``[c_1]`` read off the closed-form eigenbasis.

    Only ``E_1`` is needed, so this runs well beyond the sizes where full
    eigenvectors are built.
    """
    space = _check_space(space)
    if space == "lg":
        scale, r, coeff = lg_scale(n), n + 1, n + 1
        indices = index_sets(n + 1).I_even
    else:
        scale, r, coeff = og_scale(n) / 2, n, 2 * n
        indices = index_set_I(n)
    values = np.array([coeff * sum(zeta_point(I, scale)) for I in indices])
    return Spectrum(space, n, values, float(np.max(np.abs(values))))


def conjugation_closed(values: np.ndarray, tol: float = 1e-9) -> bool:
    """Multiset equality of ``values`` and their conjugates by greedy matching."""
    a = sorted(values, key=lambda z: (round(z.real, 9), round(z.imag, 9)))
    pool = list(np.conj(values))
    for z in a:
        dists = [abs(z - w) for w in pool]
        i = int(np.argmin(dists))
        if dists[i] > tol:
            return False
        pool.pop(i)
    return True


def rietsch_check(n: int, tol: float = 1e-9) -> tuple[IndexTuple, complex]:
    """Locate ``I_0`` maximizing ``Re E_1(zeta^I)`` over ``I_n`` and check its value.

    The maximum must be real and equal ``1/sin(pi/2n)``.
    """
    if not 1 <= n <= 12:
        raise ValueError(f"n must lie in 1..12, got {n}")
    best, best_val = None, None
    for I in index_set_I(n):
        val = sum(zeta_point(I))
        if best_val is None or val.real > best_val.real:
            best, best_val = I, val
    expected = 1.0 / math.sin(math.pi / (2 * n))
    if abs(best_val.imag) > 1e-10 or abs(best_val.real - expected) > tol:
        raise AssertionError(f"n={n}: max E_1 = {best_val}, expected {expected}")
    return best, best_val


@dataclass
class PropertyOReport:
    space: str
    n: int
    fano_index: int
    delta0: float
    is_eigenvalue: bool
    simple: bool
    roots_of_unity: bool
    top_values: list[complex] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.is_eigenvalue and self.simple and self.roots_of_unity


def property_o_check(space: str, n: int, tol: float = 1e-9) -> PropertyOReport:
    """Check the three conditions of Property O on the closed-form ``[c_1]`` spectrum."""
    space = _check_space(space)
    if not 1 <= n <= 8:
        raise ValueError(f"n must lie in 1..8, got {n}")
    spec = c1_spectrum(space, n)
    r = fano_index(space, n)
    d0 = spec.delta0
    hits = np.abs(spec.values - d0) <= tol
    top = [complex(v) for v in spec.values if abs(abs(v) - d0) <= tol]
    roots = all(abs((v / d0) ** r - 1) <= 1e2 * tol * r for v in top)
    return PropertyOReport(
        space=space,
        n=n,
        fano_index=r,
        delta0=d0,
        is_eigenvalue=bool(hits.any()),
        simple=int(hits.sum()) == 1,
        roots_of_unity=roots,
        top_values=top,
    )


def c1_perron_root(space: str, n: int, tol: float = 1e-12) -> float:
    return perron_root(c1_matrix(space, n).entries, tol=tol)
