"""Solve a batch of seeded random games and compare against the brute-force oracle.

    python3 scripts/random_sweep.py --games 500 --seed 1
"""
import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from patternsig.equilibrium import enumerate_equilibria, verify_equilibrium
from patternsig.oracle import oracle_equilibria
from patternsig.random_games import random_game


@dataclass
class SweepConfig:
    games: int = 500
    seed: int = 0
    max_types: int = 4
    max_den: int = 12
    discrete: bool = False
    check_oracle: bool = True


def run(cfg: SweepConfig):
    rng = random.Random(cfg.seed)
    kinds = Counter()
    mismatches = unsound = none = 0
    start = time.perf_counter()
    for _ in range(cfg.games):
        game = random_game(rng, K=rng.randint(2, cfg.max_types), max_den=cfg.max_den,
                           discrete=cfg.discrete)
        eqs = enumerate_equilibria(game)
        none += not eqs
        kinds.update(eq.classification for eq in eqs)
        unsound += sum(bool(verify_equilibrium(game, eq).violations) for eq in eqs)
        if cfg.check_oracle and {e.key for e in eqs} != oracle_equilibria(game):
            mismatches += 1
    elapsed = time.perf_counter() - start
    print(f"{cfg.games} games in {elapsed:.1f}s, {none} without any equilibrium")
    for kind, n in sorted(kinds.items()):
        print(f"  {kind}: {n}")
    print(f"verification failures: {unsound}")
    if cfg.check_oracle:
        print(f"oracle mismatches: {mismatches}")
    return mismatches == 0 and unsound == 0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--games", type=int, default=SweepConfig.games)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    ap.add_argument("--max-types", type=int, default=SweepConfig.max_types)
    ap.add_argument("--discrete", action="store_true")
    ap.add_argument("--no-oracle", action="store_true")
    a = ap.parse_args()
    cfg = SweepConfig(a.games, a.seed, a.max_types, discrete=a.discrete, check_oracle=not a.no_oracle)
    raise SystemExit(0 if run(cfg) else 1)


if __name__ == "__main__":
    main()
