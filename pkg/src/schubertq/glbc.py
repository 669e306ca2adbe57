"""Galkin's lower bound ``delta_0 >= dim + 1`` for LG(n) and OG(n)."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .qh import _check_space, dimension
from .spectral import c1_perron_root, delta0_closed_form

EQUALITY_TOL = 1e-9
NUMERIC_MAX_N = 8


def lemma_f(x: float) -> float:
    """``2x - 2^x (2x^2 - x + 1) sin(pi x / 2)``; nonnegative on (0, 1/3]."""
    return 2 * x - 2 ** x * (2 * x * x - x + 1) * math.sin(math.pi * x / 2)


def lemma_h(x: float) -> float:
    """``2^{x+1} x - (2x^2 + x + 1) sin(pi x / 2)``; nonnegative on [0, 1/6]."""
    return 2 ** (x + 1) * x - (2 * x * x + x + 1) * math.sin(math.pi * x / 2)


def bound(n: int) -> int:
    """``d(n) = n(n+1)/2 + 1``."""
    return dimension(n) + 1


def lemma_margin(space: str, n: int) -> float | None:
    """``f(1/(n+1))`` for LG with n >= 2, ``h(1/n)`` for OG with n >= 6, else None.

    Its sign agrees with the sign of ``delta_0 - d(n)``.
    """
    if _check_space(space) == "lg":
        return lemma_f(1 / (n + 1)) if n >= 2 else None
    return lemma_h(1 / n) if n >= 6 else None


@dataclass
class GlbcReport:
    space: str
    n: int
    dim: int
    bound: int
    delta0_closed: float
    delta0_numeric: float | None
    verdict: str
    lemma_margin: float | None

    def as_dict(self) -> dict:
        return asdict(self)


def glbc_report(space: str, n: int) -> GlbcReport:
    """Compare ``delta_0`` with ``d(n)``; the Perron root is computed for n <= 8 only."""
    space = _check_space(space)
    if not 1 <= n <= 12:
        raise ValueError(f"n must lie in 1..12, got {n}")
    d0 = delta0_closed_form(space, n)
    b = bound(n)
    if abs(d0 - b) <= EQUALITY_TOL:
        verdict = "equality"
    elif d0 > b:
        verdict = "strict"
    else:
        verdict = "fail"
    numeric = c1_perron_root(space, n) if n <= NUMERIC_MAX_N else None
    return GlbcReport(
        space=space,
        n=n,
        dim=dimension(n),
        bound=b,
        delta0_closed=d0,
        delta0_numeric=numeric,
        verdict=verdict,
        lemma_margin=lemma_margin(space, n),
    )


def glbc_table(space: str, n_max: int) -> list[GlbcReport]:
    return [glbc_report(space, n) for n in range(1, n_max + 1)]
