"""Finite signaling games in which the receiver only recognizes patterns.

A pattern is a block of a partition of the sender's type space. The prior is
declared over patterns, never over individual types. Types, messages, actions
and patterns are addressed by dense integer indices in declaration order;
labels are for display only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

# (type, message, action) -> payoff
PayoffTable = Mapping[tuple, Fraction]

# type index -> message index
SenderStrategy = tuple
# message index -> action index
ReceiverStrategy = tuple


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError(f"refusing inexact float {x!r}; pass a Fraction or 'p/q' string")
    return Fraction(x)


class PartitionError(ValueError):
    pass


class EmptyBlock(PartitionError):
    def __init__(self, block):
        self.block = block
        super().__init__(f"pattern {block} is empty")


class OverlappingBlocks(PartitionError):
    def __init__(self, type_index, label=None):
        self.type_index = type_index
        name = label if label is not None else type_index
        super().__init__(f"type {name} appears in more than one pattern")


class UncoveredType(PartitionError):
    def __init__(self, type_index, label=None):
        self.type_index = type_index
        name = label if label is not None else type_index
        super().__init__(f"type {name} is not covered by any pattern")


@dataclass(frozen=True)
class PatternPartition:
    blocks: tuple
    pattern_of: tuple

    @property
    def n_patterns(self) -> int:
        return len(self.blocks)

    def members(self, pattern: int) -> tuple:
        """Type indices of one block in increasing order."""
        return tuple(sorted(self.blocks[pattern]))


def make_partition(types: Sequence[str], blocks: Iterable[Iterable[int]]) -> PatternPartition:
    """Validate `blocks` as a partition of ``range(len(types))``.

    Raises EmptyBlock, OverlappingBlocks or UncoveredType naming the offender.
    """
    n = len(types)
    frozen = []
    owner = {}
    for b, block in enumerate(blocks):
        block = frozenset(block)
        if not block:
            raise EmptyBlock(b)
        for t in sorted(block):
            if not 0 <= t < n:
                raise UncoveredType(t)
            if t in owner:
                raise OverlappingBlocks(t, types[t])
            owner[t] = b
        frozen.append(block)
    for t in range(n):
        if t not in owner:
            raise UncoveredType(t, types[t])
    return PatternPartition(tuple(frozen), tuple(owner[t] for t in range(n)))


def discrete_partition(types: Sequence[str]) -> PatternPartition:
    """Every type is its own pattern; the classical signaling game."""
    n = len(types)
    return PatternPartition(tuple(frozenset([t]) for t in range(n)), tuple(range(n)))


def coarsest_partition(types: Sequence[str]) -> PatternPartition:
    return PatternPartition((frozenset(range(len(types))),), (0,) * len(types))


@dataclass(frozen=True, eq=True)
class SignalingGame:
    types: tuple
    partition: PatternPartition
    prior: tuple
    messages: tuple
    actions: tuple
    u1: dict = field(compare=True)
    u2: dict = field(compare=True)

    def __post_init__(self):
        object.__setattr__(self, "types", tuple(self.types))
        object.__setattr__(self, "messages", tuple(self.messages))
        object.__setattr__(self, "actions", tuple(self.actions))
        object.__setattr__(self, "prior", tuple(as_fraction(w) for w in self.prior))
        object.__setattr__(self, "u1", {k: as_fraction(v) for k, v in self.u1.items()})
        object.__setattr__(self, "u2", {k: as_fraction(v) for k, v in self.u2.items()})

    __hash__ = None

    @property
    def n_types(self) -> int:
        return len(self.types)

    @property
    def n_patterns(self) -> int:
        return self.partition.n_patterns

    @property
    def n_messages(self) -> int:
        return len(self.messages)

    @property
    def n_actions(self) -> int:
        return len(self.actions)

    def type_index(self, label: str) -> int:
        return self.types.index(label)

    def message_index(self, label: str) -> int:
        return self.messages.index(label)

    def action_index(self, label: str) -> int:
        return self.actions.index(label)

    def pattern_label(self, pattern: int) -> str:
        return "{" + ",".join(self.types[t] for t in self.partition.members(pattern)) + "}"


def make_game(types, blocks, prior, messages, actions, u1, u2) -> SignalingGame:
    """Build a game from label lists; payoff callables or tables keyed by indices.

    `u1` and `u2` may be mappings keyed by ``(t, m, a)`` indices or callables
    ``f(t, m, a)``.
    """
    types = tuple(types)
    partition = make_partition(types, blocks)
    messages, actions = tuple(messages), tuple(actions)
    keys = [(t, m, a) for t in range(len(types)) for m in range(len(messages))
            for a in range(len(actions))]

    def table(u):
        if callable(u):
            return {k: as_fraction(u(*k)) for k in keys}
        return dict(u)

    return SignalingGame(types, partition, tuple(prior), messages, actions, table(u1), table(u2))


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    def __bool__(self):
        # truthy when the game is valid
        return not self.violations

    def __iter__(self):
        return iter(self.violations)

    def __len__(self):
        return len(self.violations)

    def add(self, msg):
        self.violations.append(msg)


def validate_game(game: SignalingGame) -> ValidationReport:
    """Collect every structural violation; an empty report means a valid game."""
    report = ValidationReport()
    K, J, L = game.n_types, game.n_messages, game.n_actions

    if K < 2:
        report.add(f"type space needs at least 2 types, got {K}")
    if len(set(game.types)) != K:
        report.add("type labels are not distinct")
    if J < 1:
        report.add("message space is empty")
    elif len(set(game.messages)) != J:
        report.add("message labels are not distinct")
    if L < 1:
        report.add("action space is empty")
    elif len(set(game.actions)) != L:
        report.add("action labels are not distinct")

    part = game.partition
    seen = {}
    for b, block in enumerate(part.blocks):
        if not block:
            report.add(f"pattern {b} is empty")
        for t in sorted(block):
            if not 0 <= t < K:
                report.add(f"pattern {b} references unknown type index {t}")
            elif t in seen:
                report.add(f"type {game.types[t]} appears in patterns {seen[t]} and {b}")
            else:
                seen[t] = b
    for t in range(K):
        if t not in seen:
            report.add(f"type {game.types[t]} is not covered by any pattern")
    if len(part.pattern_of) != K or any(
        t in seen and part.pattern_of[t] != seen[t] for t in range(K)
    ):
        report.add("pattern_of map is inconsistent with the blocks")
    if not 1 <= part.n_patterns <= max(K, 1):
        report.add(f"pattern count {part.n_patterns} outside [1, {K}]")

    if len(game.prior) != part.n_patterns:
        report.add(f"prior has {len(game.prior)} weights for {part.n_patterns} patterns")
    for b, w in enumerate(game.prior):
        if w <= 0:
            report.add(f"prior weight at pattern {b} is {w}, must be > 0")
    total = sum(game.prior, Fraction(0))
    if total != 1:
        report.add(f"prior sums to {total}, must be 1")

    for name, table in (("u1", game.u1), ("u2", game.u2)):
        missing = [(t, m, a) for t in range(K) for m in range(J) for a in range(L)
                   if (t, m, a) not in table]
        for t, m, a in missing[:5]:
            report.add(f"{name} missing entry ({game.types[t]}, {game.messages[m]}, {game.actions[a]})")
        if len(missing) > 5:
            report.add(f"{name} missing {len(missing) - 5} further entries")
        extra = [k for k in table if not (
            isinstance(k, tuple) and len(k) == 3
            and 0 <= k[0] < K and 0 <= k[1] < J and 0 <= k[2] < L)]
        if extra:
            report.add(f"{name} has {len(extra)} entries outside the type/message/action ranges")
    return report


class InvalidGame(ValueError):
    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__("invalid game: " + "; ".join(report.violations))


def require_valid(game: SignalingGame) -> None:
    report = validate_game(game)
    if not report:
        raise InvalidGame(report)
