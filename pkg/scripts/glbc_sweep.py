"""Tabulate delta_0 against dim + 1 for LG(n) and OG(n) and flag equality cases."""
import argparse
from dataclasses import dataclass

from schubertq.glbc import glbc_table


@dataclass
class SweepConfig:
    n_max: int = 12
    spaces: tuple[str, ...] = ("lg", "og")


def run(cfg: SweepConfig) -> None:
    print(f"{'space':>5} {'n':>3} {'d(n)':>5} {'delta0':>14} {'perron':>14} {'verdict':>9} {'margin':>12}")
    for space in cfg.spaces:
        for r in glbc_table(space, cfg.n_max):
            perron = "-" if r.delta0_numeric is None else f"{r.delta0_numeric:.9f}"
            margin = "-" if r.lemma_margin is None else f"{r.lemma_margin:.3e}"
            print(f"{space:>5} {r.n:>3} {r.bound:>5} {r.delta0_closed:>14.9f} {perron:>14} {r.verdict:>9} {margin:>12}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=12)
    args = parser.parse_args()
    run(SweepConfig(n_max=args.n_max))
