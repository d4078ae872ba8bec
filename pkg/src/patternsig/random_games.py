"""Seeded random games for property checks and sweeps."""
from __future__ import annotations

import random
from fractions import Fraction

from .model import SignalingGame, discrete_partition, make_partition


def random_rational(rng: random.Random, max_den: int = 12, span: int = 6) -> Fraction:
    # small numerators on purpose: ties between payoffs should be common
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def random_partition_blocks(rng: random.Random, K: int, n_patterns: int) -> list:
    order = list(range(K))
    rng.shuffle(order)
    cuts = sorted(rng.sample(range(1, K), n_patterns - 1))
    blocks, start = [], 0
    for c in cuts + [K]:
        blocks.append(set(order[start:c]))
        start = c
    return blocks


def random_prior(rng: random.Random, n: int, max_den: int = 12) -> tuple:
    raw = [Fraction(rng.randint(1, max_den), rng.randint(1, max_den)) for _ in range(n)]
    total = sum(raw)
    return tuple(x / total for x in raw)


def random_game(rng: random.Random, K=None, n_patterns=None, J=None, L=None,
                max_den: int = 12, discrete: bool = False) -> SignalingGame:
    K = K or rng.randint(2, 4)
    J = J or rng.randint(1, 3)
    L = L or rng.randint(1, 3)
    types = tuple(f"t{i + 1}" for i in range(K))
    if discrete:
        partition = discrete_partition(types)
    else:
        n_patterns = n_patterns or rng.randint(1, K)
        partition = make_partition(types, random_partition_blocks(rng, K, n_patterns))
    keys = [(t, m, a) for t in range(K) for m in range(J) for a in range(L)]
    u1 = {k: random_rational(rng, max_den) for k in keys}
    u2 = {k: random_rational(rng, max_den) for k in keys}
    return SignalingGame(types, partition, random_prior(rng, partition.n_patterns, max_den),
                         tuple(f"m{j + 1}" for j in range(J)),
                         tuple(f"a{l + 1}" for l in range(L)), u1, u2)


def random_belief(rng: random.Random, n: int, max_den: int = 12) -> tuple:
    # mix point masses, faces and interior points
    kind = rng.random()
    if kind < 0.2:
        i = rng.randrange(n)
        return tuple(Fraction(int(j == i)) for j in range(n))
    raw = [Fraction(rng.randint(0 if kind < 0.5 else 1, max_den)) for _ in range(n)]
    if sum(raw) == 0:
        raw[rng.randrange(n)] = Fraction(1)
    total = sum(raw)
    return tuple(x / total for x in raw)
