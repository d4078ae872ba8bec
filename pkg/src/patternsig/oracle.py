"""Brute-force reference checks, written without reusing the solver's code paths.

Everything here loops over the raw payoff tables. Off-path beliefs are found
by trying simplex vertices, a rational grid, and finally every vertex of the
feasible polytope (tight-constraint subsystems solved by Gaussian
elimination), so the search is exact for any number of patterns.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .model import SignalingGame

GRID_DENOMINATOR = {1: 1, 2: 64, 3: 24}
DEFAULT_GRID = 12


def _worst(game, p, m, a):
    best = None
    for t in range(game.n_types):
        if game.partition.pattern_of[t] != p:
            continue
        v = game.u2[t, m, a]
        if best is None or v < best:
            best = v
    return best


def oracle_objective(game: SignalingGame, belief, m: int, a: int) -> Fraction:
    total = Fraction(0)
    for p in range(game.n_patterns):
        total += Fraction(belief[p]) * _worst(game, p, m, a)
    return total


def oracle_best_action(game: SignalingGame, belief, m: int) -> frozenset:
    scores = {}
    for a in range(game.n_actions):
        scores[a] = oracle_objective(game, belief, m, a)
    top = max(scores.values())
    return frozenset(a for a, s in scores.items() if s == top)


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _solve(matrix, rhs):
    """Unique solution of a square system, or None if singular."""
    n = len(matrix)
    aug = [list(row) + [r] for row, r in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col] / aug[col][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] / aug[i][i] for i in range(n)]


def _supports(worst, q, a):
    vals = [sum((q[p] * worst[p][b] for p in range(len(q))), Fraction(0))
            for b in range(len(worst[0]))]
    return vals[a] == max(vals)


def oracle_support(game: SignalingGame, m: int, a: int):
    """A belief over patterns making `a` optimal after `m`, or None."""
    P, L = game.n_patterns, game.n_actions
    worst = [[_worst(game, p, m, b) for b in range(L)] for p in range(P)]

    for p in range(P):
        q = [Fraction(int(i == p)) for i in range(P)]
        if _supports(worst, q, a):
            return tuple(q)

    d = GRID_DENOMINATOR.get(P, DEFAULT_GRID)
    for comp in _compositions(d, P):
        q = [Fraction(c, d) for c in comp]
        if _supports(worst, q, a):
            return tuple(q)

    # polytope vertices: P-1 tight inequalities plus the simplex equation
    ineqs = [[Fraction(int(i == j)) for i in range(P)] for j in range(P)]
    ineqs += [[worst[p][a] - worst[p][b] for p in range(P)] for b in range(L) if b != a]
    for chosen in itertools.combinations(ineqs, P - 1):
        sol = _solve(list(chosen) + [[Fraction(1)] * P], [Fraction(0)] * (P - 1) + [Fraction(1)])
        if sol is None or any(x < 0 for x in sol):
            continue
        if _supports(worst, sol, a):
            return tuple(sol)
    return None


def oracle_pattern_sets(game: SignalingGame, sender, receiver) -> list:
    """M*(t'): messages of the types reaching the joint (type, message) maximum."""
    out = []
    for p in range(game.n_patterns):
        members = [t for t in range(game.n_types) if game.partition.pattern_of[t] == p]
        top = max(game.u1[t, m, receiver[m]] for t in members for m in range(game.n_messages))
        out.append({sender[t] for t in members if game.u1[t, sender[t], receiver[sender[t]]] == top})
    return out


@dataclass
class OracleVerdict:
    accepted: bool
    reason: str = ""
    posteriors: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    def __bool__(self):
        return self.accepted


def oracle_pbe_check(game: SignalingGame, sender, receiver, _support_cache=None) -> OracleVerdict:
    K, J, P = game.n_types, game.n_messages, game.n_patterns
    for t in range(K):
        mine = game.u1[t, sender[t], receiver[sender[t]]]
        for m in range(J):
            other = game.u1[t, m, receiver[m]]
            if other > mine:
                return OracleVerdict(False, f"sender: type {t} deviates to message {m} ({other} > {mine})")

    sets = oracle_pattern_sets(game, sender, receiver)
    posteriors = {}
    for m in range(J):
        weights = []
        for p in range(P):
            mix = Fraction(1, len(sets[p])) if m in sets[p] else Fraction(0)
            weights.append(game.prior[p] * mix)
        total = sum(weights)
        if total > 0:
            q = [w / total for w in weights]
            posteriors[m] = q
            if receiver[m] not in oracle_best_action(game, q, m):
                return OracleVerdict(False, f"receiver: action {receiver[m]} not optimal on-path at {m}")

    witnesses = {}
    for m in range(J):
        if m in posteriors:
            continue
        key = (m, receiver[m])
        if _support_cache is not None and key in _support_cache:
            w = _support_cache[key]
        else:
            w = oracle_support(game, m, receiver[m])
            if _support_cache is not None:
                _support_cache[key] = w
        if w is None:
            return OracleVerdict(False, f"receiver: no belief supports action {receiver[m]} off-path at {m}")
        witnesses[m] = w
    return OracleVerdict(True, "", posteriors, witnesses)


def oracle_equilibria(game: SignalingGame) -> set:
    """Every (sender, receiver) pure pair the oracle accepts."""
    cache = {}
    accepted = set()
    for receiver in itertools.product(range(game.n_actions), repeat=game.n_messages):
        for sender in itertools.product(range(game.n_messages), repeat=game.n_types):
            if oracle_pbe_check(game, sender, receiver, cache):
                accepted.add((sender, receiver))
    return accepted


def classical_pbe_check(game: SignalingGame, sender, receiver) -> bool:
    """Textbook pure-strategy PBE test treating each type as fully observable.

    The type prior is the prior of the type's own pattern, which requires the
    discrete partition. The receiver maximizes plain expected utility.
    """
    K, J, L = game.n_types, game.n_messages, game.n_actions
    if game.n_patterns != K:
        raise ValueError("classical check needs the discrete partition")
    prior = [game.prior[game.partition.pattern_of[t]] for t in range(K)]
    for t in range(K):
        for m in range(J):
            if game.u1[t, m, receiver[m]] > game.u1[t, sender[t], receiver[sender[t]]]:
                return False

    def eu(q, m, a):
        return sum((q[t] * game.u2[t, m, a] for t in range(K)), Fraction(0))

    for m in range(J):
        mass = [prior[t] if sender[t] == m else Fraction(0) for t in range(K)]
        z = sum(mass)
        if z > 0:
            q = [x / z for x in mass]
            if any(eu(q, m, b) > eu(q, m, receiver[m]) for b in range(L)):
                return False
        else:
            # free belief over types: is receiver[m] a best reply to some q?
            rows = [[game.u2[t, m, receiver[m]] - game.u2[t, m, b] for t in range(K)]
                    for b in range(L) if b != receiver[m]]
            if not _exists_simplex_point(K, rows):
                return False
    return True


def _exists_simplex_point(n, rows):
    for chosen in itertools.combinations(
            [[Fraction(int(i == j)) for i in range(n)] for j in range(n)] + rows, n - 1):
        sol = _solve(list(chosen) + [[Fraction(1)] * n], [Fraction(0)] * (n - 1) + [Fraction(1)])
        if sol is None or any(x < 0 for x in sol):
            continue
        if all(sum((g[i] * sol[i] for i in range(n)), Fraction(0)) >= 0 for g in rows):
            return True
    return False
