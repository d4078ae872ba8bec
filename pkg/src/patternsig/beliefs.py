"""Message distributions per pattern and Bayesian posteriors over patterns.

A pattern mixes uniformly over its optimal message set, and the receiver
updates its pattern prior by Bayes' rule on messages sent with positive
probability. Messages no pattern sends are off-path and get no posterior.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import SignalingGame
from .receiver import Belief
from .sender import SelectionProfile


@dataclass(frozen=True)
class ConditionalMessageDist:
    table: tuple  # table[pattern][message]

    def __call__(self, m: int, pattern: int) -> Fraction:
        return self.table[pattern][m]

    @property
    def n_patterns(self) -> int:
        return len(self.table)

    @property
    def n_messages(self) -> int:
        return len(self.table[0]) if self.table else 0


@dataclass(frozen=True)
class PosteriorProfile:
    on_path: dict   # message -> Belief
    off_path: frozenset

    __hash__ = None


def conditional_message_dist(profile: SelectionProfile, game: SignalingGame) -> ConditionalMessageDist:
    rows = []
    for sent in profile.pattern_message_sets:
        w = Fraction(1, len(sent))
        rows.append(tuple(w if m in sent else Fraction(0) for m in range(game.n_messages)))
    return ConditionalMessageDist(tuple(rows))


def incentive_patterns(m: int, profile: SelectionProfile) -> frozenset:
    return frozenset(p for p, sent in enumerate(profile.pattern_message_sets) if m in sent)


def posterior(prior, dist: ConditionalMessageDist, m: int):
    """Bayes update of the pattern prior after message `m`.

    Returns None when no pattern sends `m`.
    """
    joint = [w * dist(m, p) for p, w in enumerate(prior)]
    total = sum(joint, Fraction(0))
    if total == 0:
        return None
    return Belief(tuple(x / total for x in joint))


def posterior_profile(game: SignalingGame, dist: ConditionalMessageDist) -> PosteriorProfile:
    on_path, off_path = {}, set()
    for m in range(game.n_messages):
        q = posterior(game.prior, dist, m)
        if q is None:
            off_path.add(m)
        else:
            on_path[m] = q
    return PosteriorProfile(on_path, frozenset(off_path))
