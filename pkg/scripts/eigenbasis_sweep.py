"""Residuals of the closed-form eigenbasis against the exact Pieri matrices."""
import argparse
import time
from dataclasses import dataclass

from schubertq.spectral import eigenbasis, eigenvector_rank, verify_eigenpairs


@dataclass
class SweepConfig:
    n_max: int = 8
    tol: float = 1e-8


def run(cfg: SweepConfig) -> None:
    for space in ("lg", "og"):
        for n in range(1, cfg.n_max + 1):
            t0 = time.perf_counter()
            pairs = eigenbasis(space, n)
            residual = verify_eigenpairs(space, n, tol=cfg.tol, pairs=pairs)
            rank = eigenvector_rank(pairs)
            print(f"{space} n={n:<2} dim={2 ** n:<4} rank={rank:<4} residual={residual:.2e} "
                  f"({time.perf_counter() - t0:.2f}s)")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=8)
    parser.add_argument("--tol", type=float, default=1e-8)
    args = parser.parse_args()
    run(SweepConfig(args.n_max, args.tol))
