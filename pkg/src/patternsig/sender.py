"""Sender best responses against a fixed receiver strategy.

Each type picks a message maximizing ``u1(t, m, s2(m))``. A pattern's optimal
message set M*(t') is read off the joint maximization over (message, type)
inside the pattern: only the types of the pattern that reach the pattern's
highest attainable payoff contribute their selected message. When all types
of a pattern tie (or the pattern is a single type) this is simply the set of
messages the pattern's types send.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .model import PatternPartition, SignalingGame


@dataclass(frozen=True)
class TypeBestResponse:
    per_type: tuple  # type -> frozenset of optimal messages
    values: tuple    # type -> optimal payoff

    def __post_init__(self):
        for t, ms in enumerate(self.per_type):
            if not ms:
                raise ValueError(f"type {t} has an empty best-response set")


@dataclass(frozen=True)
class SelectionProfile:
    strategy: tuple              # type -> message
    pattern_message_sets: tuple  # pattern -> frozenset of messages, M*(t')


def sender_payoff(game: SignalingGame, s2, t: int, m: int) -> Fraction:
    return game.u1[t, m, s2[m]]


def type_best_messages(game: SignalingGame, s2) -> TypeBestResponse:
    if len(s2) != game.n_messages:
        raise ValueError(f"receiver strategy has {len(s2)} entries for {game.n_messages} messages")
    sets, values = [], []
    for t in range(game.n_types):
        row = [game.u1[t, m, s2[m]] for m in range(game.n_messages)]
        best = max(row)
        sets.append(frozenset(m for m, v in enumerate(row) if v == best))
        values.append(best)
    return TypeBestResponse(tuple(sets), tuple(values))


def top_types(values, partition: PatternPartition, pattern: int) -> tuple:
    """Types of `pattern` attaining the pattern's highest optimal payoff."""
    members = partition.members(pattern)
    best = max(values[t] for t in members)
    return tuple(t for t in members if values[t] == best)


def pattern_sets_for(strategy, values, partition: PatternPartition) -> tuple:
    return tuple(
        frozenset(strategy[t] for t in top_types(values, partition, p))
        for p in range(partition.n_patterns)
    )


def enumerate_selections(br: TypeBestResponse, partition: PatternPartition) -> list:
    """All sender pure strategies drawn from the per-type argmax sets.

    Ordered lexicographically by (type index, message index).
    """
    choices = [sorted(ms) for ms in br.per_type]
    return [
        SelectionProfile(tuple(strategy), pattern_sets_for(strategy, br.values, partition))
        for strategy in itertools.product(*choices)
    ]


def optimal_message_set(profile: SelectionProfile, pattern: int) -> frozenset:
    return profile.pattern_message_sets[pattern]


def selection_image(strategy, partition: PatternPartition) -> tuple:
    """Messages sent by every type of each pattern, ignoring payoffs."""
    return tuple(frozenset(strategy[t] for t in partition.members(p))
                 for p in range(partition.n_patterns))


def profile_for(game: SignalingGame, strategy, s2=None) -> SelectionProfile:
    """Wrap an arbitrary sender strategy as a profile.

    With a receiver strategy the pattern sets follow the top-payoff rule used
    by the solver; without one every type of the pattern contributes.
    """
    strategy = tuple(strategy)
    if s2 is None:
        return SelectionProfile(strategy, selection_image(strategy, game.partition))
    values = tuple(game.u1[t, strategy[t], s2[strategy[t]]] for t in range(game.n_types))
    return SelectionProfile(strategy, pattern_sets_for(strategy, values, game.partition))
