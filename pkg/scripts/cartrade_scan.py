"""Equilibria of the car trade across a grid of prior weights and pretending costs.

    python3 scripts/cartrade_scan.py --alphas 1/4,1/2,3/4
"""
import argparse
from dataclasses import dataclass, field
from fractions import Fraction

from patternsig import cartrade as ct
from patternsig.equilibrium import enumerate_equilibria


@dataclass
class ScanConfig:
    values: tuple = (2, 5, 10)
    bids: tuple = (3, 6, 9)
    alphas: list = field(default_factory=lambda: [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)])
    cost_grid: tuple = (1, 3, 5, 7, 9, 11)


def scan(cfg: ScanConfig):
    rows = []
    for alpha in cfg.alphas:
        for c12 in cfg.cost_grid:
            for c23 in cfg.cost_grid:
                for c13 in cfg.cost_grid:
                    try:
                        p = ct.CarTradeParams(cfg.values, cfg.bids, (c12, c13, c23), alpha)
                    except ct.InvalidParams:
                        continue
                    eqs = enumerate_equilibria(ct.build_cartrade_game(p))
                    rows.append((p, eqs))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--alphas", default="1/4,1/2,3/4")
    a = ap.parse_args()
    cfg = ScanConfig(alphas=[Fraction(x) for x in a.alphas.split(",")])
    print("alpha  c12 c13 c23  #eq  sender/receiver pairs")
    for p, eqs in scan(cfg):
        pairs = " ".join(f"{ct.fmt_strategy(e.sender)}/{ct.fmt_actions(e.receiver)}" for e in eqs)
        c12, c13, c23 = p.costs
        print(f"{str(p.alpha):5}  {c12!s:>3} {c13!s:>3} {c23!s:>3}  {len(eqs):3}  {pairs}")


if __name__ == "__main__":
    main()
