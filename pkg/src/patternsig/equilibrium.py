"""Perfect Bayesian equilibria of pattern-recognition signaling games.

Search space: pure receiver strategies (all L**J of them) and, for each, every
sender pure strategy built from per-type argmax sets. Patterns mix uniformly
over their optimal message sets; on-path beliefs come from Bayes' rule and
off-path beliefs are free, so an off-path message only needs *some* belief
under which the prescribed action is optimal.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .beliefs import (ConditionalMessageDist, PosteriorProfile, conditional_message_dist,
                      posterior_profile)
from .lp import simplex_point
from .model import SignalingGame, ValidationReport, require_valid
from .receiver import Belief, best_actions, worst_case_table
from .sender import (SelectionProfile, enumerate_selections, pattern_sets_for,
                     type_best_messages)

SEPARATING = "pattern-separating"
POOLING = "pattern-pooling"
SEMI_POOLING = "semi-pooling"


@dataclass(frozen=True)
class Equilibrium:
    sender: tuple
    receiver: tuple
    posteriors: PosteriorProfile
    message_dist: ConditionalMessageDist
    off_path_witnesses: dict
    classification: str
    pattern_message_sets: tuple = field(default=())

    __hash__ = None

    @property
    def key(self) -> tuple:
        return (self.sender, self.receiver)


class VerificationReport(ValidationReport):
    pass


def classify(pattern_sets) -> str:
    sets = list(pattern_sets)
    if all(s == sets[0] for s in sets):
        return POOLING
    if all(len(s) == 1 for s in sets) and len(set(sets)) == len(sets):
        return SEPARATING
    return SEMI_POOLING


def supporting_belief(game: SignalingGame, m: int, a: int):
    """Some belief under which `a` is a best reply to `m`, or None.

    Point masses are tried first; otherwise the exact simplex feasibility
    problem ``sum_p q[p] * (w[p][a] - w[p][b]) >= 0 for all b`` is solved.
    """
    table = worst_case_table(game, m)
    n = game.n_patterns
    for p in range(n):
        if table[p][a] == max(table[p]):
            return Belief.point_mass(n, p)
    rows = [[table[p][a] - table[p][b] for p in range(n)]
            for b in range(game.n_actions) if b != a]
    q = simplex_point(n, rows)
    return None if q is None else Belief(q)


def _receiver_strategies(game: SignalingGame):
    return itertools.product(range(game.n_actions), repeat=game.n_messages)


def candidate(game: SignalingGame, receiver, profile: SelectionProfile, support_cache=None):
    """Return the Equilibrium extending (profile, receiver), or None."""
    if support_cache is None:
        support_cache = {}
    dist = conditional_message_dist(profile, game)
    post = posterior_profile(game, dist)
    for m, q in post.on_path.items():
        if receiver[m] not in best_actions(game, q, m)[0]:
            return None
    witnesses = {}
    for m in sorted(post.off_path):
        key = (m, receiver[m])
        if key not in support_cache:
            support_cache[key] = supporting_belief(game, m, receiver[m])
        w = support_cache[key]
        if w is None:
            return None
        witnesses[m] = w
    return Equilibrium(
        sender=profile.strategy,
        receiver=tuple(receiver),
        posteriors=post,
        message_dist=dist,
        off_path_witnesses=witnesses,
        classification=classify(profile.pattern_message_sets),
        pattern_message_sets=profile.pattern_message_sets,
    )


def enumerate_equilibria(game: SignalingGame) -> list:
    require_valid(game)
    cache = {}
    found = []
    for receiver in _receiver_strategies(game):
        br = type_best_messages(game, receiver)
        for profile in enumerate_selections(br, game.partition):
            eq = candidate(game, receiver, profile, cache)
            if eq is not None:
                found.append(eq)
    return found


def _objective(table, belief, a):
    return sum((belief[p] * table[p][a] for p in range(len(table))), Fraction(0))


def _argmax_under(game, belief, m):
    table = worst_case_table(game, m)
    vals = [_objective(table, belief, a) for a in range(game.n_actions)]
    best = max(vals)
    return {a for a, v in enumerate(vals) if v == best}, vals


def verify_equilibrium(game: SignalingGame, eq: Equilibrium) -> VerificationReport:
    """Re-derive every equilibrium requirement from scratch and list violations."""
    rep = VerificationReport()
    K, J, L, P = game.n_types, game.n_messages, game.n_actions, game.n_patterns
    ms, ts, acts = game.messages, game.types, game.actions

    if len(eq.sender) != K or any(not 0 <= m < J for m in eq.sender):
        rep.add("sender strategy is not a total type -> message map")
        return rep
    if len(eq.receiver) != J or any(not 0 <= a < L for a in eq.receiver):
        rep.add("receiver strategy is not a total message -> action map")
        return rep

    # every type best-responds to the receiver
    for t in range(K):
        pay = [game.u1[t, m, eq.receiver[m]] for m in range(J)]
        chosen = pay[eq.sender[t]]
        best = max(pay)
        if chosen < best:
            dev = pay.index(best)
            rep.add(f"sender: type {ts[t]} prefers {ms[dev]} ({best}) over {ms[eq.sender[t]]} ({chosen})")

    values = tuple(game.u1[t, eq.sender[t], eq.receiver[eq.sender[t]]] for t in range(K))
    sets = pattern_sets_for(eq.sender, values, game.partition)
    if eq.pattern_message_sets and tuple(eq.pattern_message_sets) != sets:
        rep.add("sender: stored optimal message sets differ from the recomputed ones")

    # uniform mixing table
    table = eq.message_dist.table
    if len(table) != P or any(len(row) != J for row in table):
        rep.add("mixing: message distribution has the wrong shape")
        return rep
    for p in range(P):
        row_sum = sum(table[p], Fraction(0))
        if row_sum != 1:
            rep.add(f"mixing: message distribution of pattern {p} sums to {row_sum}")
        for m in range(J):
            want = Fraction(1, len(sets[p])) if m in sets[p] else Fraction(0)
            if table[p][m] != want:
                rep.add(f"mixing: p({ms[m]}|pattern {p}) is {table[p][m]}, expected {want}")

    # on-path messages and their Bayes posteriors
    sent = {m for p in range(P) for m in sets[p]}
    on_path = eq.posteriors.on_path
    if set(on_path) != sent:
        rep.add(f"bayes: on-path messages {sorted(on_path)} differ from sent messages {sorted(sent)}")
    if set(eq.posteriors.off_path) != set(range(J)) - sent:
        rep.add("bayes: off-path message set is wrong")

    for m, q in sorted(on_path.items()):
        if len(q) != P:
            rep.add(f"belief: posterior after {ms[m]} has {len(q)} entries")
            continue
        total = sum(q, Fraction(0))
        if total != 1 or any(not 0 <= x <= 1 for x in q):
            rep.add(f"belief: posterior after {ms[m]} is not a distribution (sums to {total})")
        denom = sum((game.prior[p] * Fraction(int(m in sets[p]), len(sets[p])) for p in range(P)),
                    Fraction(0))
        if denom > 0:
            for p in range(P):
                num = game.prior[p] * Fraction(int(m in sets[p]), len(sets[p]))
                if q[p] * denom != num:
                    rep.add(f"bayes: posterior of pattern {p} after {ms[m]} is {q[p]}, "
                            f"Bayes gives {num / denom}")
        argmax, vals = _argmax_under(game, q, m)
        if eq.receiver[m] not in argmax:
            rep.add(f"receiver: {acts[eq.receiver[m]]} after {ms[m]} earns {vals[eq.receiver[m]]}, "
                    f"best is {max(vals)}")

    for m in sorted(set(range(J)) - sent):
        w = eq.off_path_witnesses.get(m)
        if w is None:
            rep.add(f"receiver: off-path message {ms[m]} has no supporting belief")
            continue
        errs = w.errors(P)
        if errs:
            rep.add(f"belief: off-path witness for {ms[m]} invalid: {'; '.join(errs)}")
            continue
        argmax, vals = _argmax_under(game, w, m)
        if eq.receiver[m] not in argmax:
            rep.add(f"receiver: off-path {acts[eq.receiver[m]]} after {ms[m]} not optimal under witness {w}")

    if eq.classification != classify(sets):
        rep.add(f"classification {eq.classification} should be {classify(sets)}")
    return rep
