import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from patternsig.cartrade import CarTradeParams, build_cartrade_game
from patternsig.model import SignalingGame, coarsest_partition, discrete_partition
from patternsig.random_games import random_game
from patternsig.receiver import (Belief, PatternCountNot2, belief_intervals, best_actions,
                                 receiver_objective, region_owner, worst_case_payoff)

from conftest import beliefs, games, rationals

M1, M2, M3 = 0, 1, 2
A1, A2 = 0, 1


def rho(x):
    return Belief.two_point(Fraction(x))


def test_worst_case_in_not_high_pattern(car):
    # V2 > V1, so the low-quality car is the worst case of {t1, t2}
    for m, bid in enumerate((3, 6, 9)):
        assert worst_case_payoff(car, 0, m, A2) == 2 - bid


def test_worst_case_singleton_pattern(car):
    for m in range(3):
        for a in range(2):
            assert worst_case_payoff(car, 1, m, a) == car.u2[2, m, a]


def test_worst_case_full_block_matches_column_min():
    rng = random.Random(3)
    for _ in range(50):
        g = random_game(rng, K=3, n_patterns=1)
        for m in range(g.n_messages):
            for a in range(g.n_actions):
                assert worst_case_payoff(g, 0, m, a) == min(g.u2[t, m, a] for t in range(3))


@pytest.mark.parametrize("r", [Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(7, 8), Fraction(1)])
def test_objective_matches_closed_form(car, r):
    # rho (V1 - m1) + (1 - rho)(V3 - m1)
    assert receiver_objective(car, rho(r), M1, A2) == r * (2 - 3) + (1 - r) * (10 - 3)
    assert receiver_objective(car, rho(r), M1, A1) == 0


def test_objective_at_half(car):
    assert receiver_objective(car, rho(Fraction(1, 2)), M1, A2) == 3


def test_best_actions_below_threshold(car):
    assert best_actions(car, rho(Fraction(1, 2)), M1) == (frozenset({A2}), 3)


def test_best_actions_certain_low(car):
    assert best_actions(car, rho(1), M1) == (frozenset({A1}), 0)


def test_best_actions_tie_at_threshold(car):
    argmax, value = best_actions(car, rho(Fraction(7, 8)), M1)
    assert argmax == {A1, A2}
    assert value == 0
    assert min(argmax) == A1


def test_best_actions_rejects_bad_belief(car):
    with pytest.raises(ValueError, match="sums to"):
        best_actions(car, Belief((Fraction(1, 2), Fraction(1, 3))), M1)


def test_intervals_message_two(car):
    regions = belief_intervals(car, M2)
    a1, a2 = regions
    assert [str(iv) for iv in a2.intervals] == ["[0, 1/2)"]
    assert [str(iv) for iv in a1.intervals] == ["[1/2, 1]"]
    # sampled beliefs agree with best_actions
    for k in range(101):
        x = Fraction(k, 100)
        assert region_owner(regions, x) == min(best_actions(car, rho(x), M2)[0])


def test_intervals_when_bid_exceeds_top_value():
    game = build_cartrade_game(CarTradeParams((2, 5, 10), (3, 6, 11), (2, 8, 4), Fraction(1, 2)))
    a1, a2 = belief_intervals(game, M3)
    assert a2.empty
    assert [str(iv) for iv in a1.intervals] == ["[0, 1]"]


def test_intervals_constant_objective():
    types = ("t1", "t2")
    keys = [(t, 0, a) for t in range(2) for a in range(3)]
    game = SignalingGame(types, discrete_partition(types),
                         (Fraction(1, 2), Fraction(1, 2)), ("m1",), ("a1", "a2", "a3"),
                         {k: 0 for k in keys}, {k: 5 for k in keys})
    regions = belief_intervals(game, 0)
    assert [str(iv) for iv in regions[0].intervals] == ["[0, 1]"]
    assert regions[1].empty and regions[2].empty


def test_intervals_need_two_patterns():
    game = random_game(random.Random(0), K=3, n_patterns=3)
    with pytest.raises(PatternCountNot2):
        belief_intervals(game, 0)


def _brute_argmax(game, q, m):
    vals = [sum(q[p] * min(game.u2[t, m, a] for t in game.partition.blocks[p])
                for p in range(game.n_patterns)) for a in range(game.n_actions)]
    return {a for a, v in enumerate(vals) if v == max(vals)}


@given(games(), st.data())
def test_best_actions_is_exhaustive_argmax(game, data):
    q = data.draw(beliefs(game.n_patterns))
    m = data.draw(st.integers(0, game.n_messages - 1))
    assert best_actions(game, Belief(q), m)[0] == _brute_argmax(game, q, m)


@given(games(), st.data(), st.integers(1, 9).map(Fraction), rationals())
def test_argmax_invariant_under_positive_affine_u2(game, data, c, d):
    m = data.draw(st.integers(0, game.n_messages - 1))
    q = Belief(data.draw(beliefs(game.n_patterns)))
    u2 = {k: (c * v + d if k[1] == m else v) for k, v in game.u2.items()}
    scaled = SignalingGame(game.types, game.partition, game.prior, game.messages, game.actions,
                           game.u1, u2)
    assert best_actions(game, q, m)[0] == best_actions(scaled, q, m)[0]


@given(games(), st.data())
def test_coarsest_partition_is_pure_maximin(game, data):
    coarse = SignalingGame(game.types, coarsest_partition(game.types), (1,), game.messages,
                           game.actions, game.u1, game.u2)
    m = data.draw(st.integers(0, game.n_messages - 1))
    worst = [min(game.u2[t, m, a] for t in range(game.n_types)) for a in range(game.n_actions)]
    expected = {a for a, w in enumerate(worst) if w == max(worst)}
    assert best_actions(coarse, Belief((1,)), m)[0] == expected


@given(games(min_types=2, max_types=4), st.data())
def test_intervals_partition_unit_interval(game, data):
    if game.n_patterns != 2:
        return
    m = data.draw(st.integers(0, game.n_messages - 1))
    regions = belief_intervals(game, m)
    ivs = sorted((iv for r in regions for iv in r.intervals), key=lambda iv: (iv.lo, not iv.lo_closed))
    assert ivs[0].lo == 0 and ivs[0].lo_closed
    assert ivs[-1].hi == 1 and ivs[-1].hi_closed
    for left, right in zip(ivs, ivs[1:]):
        assert left.hi == right.lo
        assert left.hi_closed != right.lo_closed


def test_intervals_agree_with_best_actions_on_samples():
    rng = random.Random(11)
    for _ in range(8):
        game = random_game(rng, K=rng.randint(2, 4), n_patterns=2)
        for m in range(game.n_messages):
            regions = belief_intervals(game, m)
            for _ in range(1000):
                x = Fraction(rng.randint(0, 240), 240)
                assert region_owner(regions, x) == min(best_actions(game, rho(x), m)[0])
