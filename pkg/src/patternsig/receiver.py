"""Receiver best responses under the maximin-within-pattern objective.

The receiver weighs patterns by its belief but evaluates each pattern by the
worst payoff among the types it contains:

    objective(a | m, q) = sum_p q[p] * min_{t in p} u2(t, m, a)
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .model import SignalingGame, as_fraction


@dataclass(frozen=True)
class Belief:
    """Probability vector over patterns."""

    probs: tuple

    def __post_init__(self):
        object.__setattr__(self, "probs", tuple(as_fraction(p) for p in self.probs))

    def __len__(self):
        return len(self.probs)

    def __iter__(self):
        return iter(self.probs)

    def __getitem__(self, i):
        return self.probs[i]

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.probs) + ")"

    @classmethod
    def point_mass(cls, n: int, pattern: int) -> "Belief":
        return cls(tuple(Fraction(int(i == pattern)) for i in range(n)))

    @classmethod
    def two_point(cls, first: Fraction) -> "Belief":
        first = as_fraction(first)
        return cls((first, 1 - first))

    def errors(self, n_patterns: int | None = None) -> list:
        out = []
        if n_patterns is not None and len(self.probs) != n_patterns:
            out.append(f"belief has {len(self.probs)} entries for {n_patterns} patterns")
        for i, p in enumerate(self.probs):
            if not 0 <= p <= 1:
                out.append(f"belief entry {i} is {p}, outside [0, 1]")
        total = sum(self.probs, Fraction(0))
        if total != 1:
            out.append(f"belief sums to {total}, must be 1")
        return out


class PatternCountNot2(ValueError):
    pass


def _check_belief(game: SignalingGame, belief: Belief) -> None:
    errs = belief.errors(game.n_patterns)
    if errs:
        raise ValueError("; ".join(errs))


def worst_case_payoff(game: SignalingGame, pattern: int, m: int, a: int) -> Fraction:
    return min(game.u2[t, m, a] for t in game.partition.blocks[pattern])


def worst_case_table(game: SignalingGame, m: int) -> list:
    """``table[p][a]`` = worst payoff in pattern p for action a after message m."""
    return [[worst_case_payoff(game, p, m, a) for a in range(game.n_actions)]
            for p in range(game.n_patterns)]


def receiver_objective(game: SignalingGame, belief: Belief, m: int, a: int) -> Fraction:
    return sum((q * worst_case_payoff(game, p, m, a) for p, q in enumerate(belief)),
               Fraction(0))


def best_actions(game: SignalingGame, belief: Belief, m: int) -> tuple:
    """Return ``(argmax set, optimal value)`` of the receiver objective.

    The canonical response is ``min(argmax set)``.
    """
    _check_belief(game, belief)
    table = worst_case_table(game, m)
    values = [sum((belief[p] * table[p][a] for p in range(game.n_patterns)), Fraction(0))
              for a in range(game.n_actions)]
    best = max(values)
    return frozenset(a for a, v in enumerate(values) if v == best), best


def canonical_action(game: SignalingGame, belief: Belief, m: int) -> int:
    return min(best_actions(game, belief, m)[0])


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = True

    def __contains__(self, x):
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def __str__(self):
        if self.lo == self.hi:
            return f"{{{self.lo}}}"
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo}, {self.hi}{right}"


@dataclass(frozen=True)
class ActionRegion:
    action: int
    intervals: tuple

    def __contains__(self, x):
        return any(x in iv for iv in self.intervals)

    @property
    def empty(self) -> bool:
        return not self.intervals


def belief_intervals(game: SignalingGame, m: int) -> list:
    """Split [0, 1] by canonical best action, for two-pattern games.

    The coordinate is the probability of the first pattern. Each action's
    objective is affine in it, so region boundaries sit at pairwise crossings.
    One ActionRegion per action is returned, possibly empty.
    """
    if game.n_patterns != 2:
        raise PatternCountNot2(
            f"belief intervals need exactly 2 patterns, game has {game.n_patterns}")
    table = worst_case_table(game, m)
    L = game.n_actions
    # f_a(x) = x * w0[a] + (1 - x) * w1[a] = w1[a] + x * (w0[a] - w1[a])
    intercept = [table[1][a] for a in range(L)]
    slope = [table[0][a] - table[1][a] for a in range(L)]

    cuts = {Fraction(0), Fraction(1)}
    for a in range(L):
        for b in range(a + 1, L):
            ds = slope[a] - slope[b]
            if ds != 0:
                x = (intercept[b] - intercept[a]) / ds
                if 0 < x < 1:
                    cuts.add(x)
    cuts = sorted(cuts)

    def owner(x):
        vals = [intercept[a] + x * slope[a] for a in range(L)]
        best = max(vals)
        return vals.index(best)

    # alternating points and open gaps, left to right
    pieces = []
    for i, x in enumerate(cuts):
        pieces.append((x, x, True, True, owner(x)))
        if i + 1 < len(cuts):
            mid = (x + cuts[i + 1]) / 2
            pieces.append((x, cuts[i + 1], False, False, owner(mid)))

    merged = []
    for lo, hi, lc, hc, a in pieces:
        if merged and merged[-1][4] == a:
            plo, _, plc, _, _ = merged[-1]
            merged[-1] = (plo, hi, plc, hc, a)
        else:
            merged.append((lo, hi, lc, hc, a))

    by_action = {a: [] for a in range(L)}
    for lo, hi, lc, hc, a in merged:
        by_action[a].append(Interval(lo, hi, lc, hc))
    return [ActionRegion(a, tuple(by_action[a])) for a in range(L)]


def region_owner(regions: Sequence[ActionRegion], x: Fraction) -> int:
    for r in regions:
        if x in r:
            return r.action
    raise ValueError(f"{x} not covered by any region")
