from fractions import Fraction

from hypothesis import given, strategies as st

from patternsig.cartrade import CarTradeParams, build_cartrade_game, zone_receiver_strategy
from patternsig.model import SignalingGame, discrete_partition
from patternsig.sender import (SelectionProfile, TypeBestResponse, enumerate_selections,
                               optimal_message_set, profile_for, type_best_messages)

from conftest import games

M1, M2, M3 = 0, 1, 2


def test_d5_everyone_bids_low(car):
    br = type_best_messages(car, zone_receiver_strategy("D5"))
    assert br.per_type == ({M1}, {M1}, {M1})


def test_d1_tie_sets(car):
    br = type_best_messages(car, zone_receiver_strategy("D1"))
    assert br.per_type == ({M1}, {M1, M2}, {M1, M2, M3})


def test_d2_cheap_pretending_goes_high(car):
    # c13 = 8 < m3 = 9 and c23 = 4 < 9
    br = type_best_messages(car, zone_receiver_strategy("D2"))
    assert br.per_type == ({M3}, {M3}, {M3})


def test_d1_has_six_selections(car):
    br = type_best_messages(car, zone_receiver_strategy("D1"))
    profiles = enumerate_selections(br, car.partition)
    assert len(profiles) == 6
    assert [p.strategy for p in profiles] == [
        (0, 0, 0), (0, 0, 1), (0, 0, 2), (0, 1, 0), (0, 1, 1), (0, 1, 2)]


def test_d8_single_selection(car):
    br = type_best_messages(car, zone_receiver_strategy("D8"))
    (profile,) = enumerate_selections(br, car.partition)
    assert profile.strategy == (M2, M2, M3)
    assert profile.pattern_message_sets == ({M2}, {M3})


def test_no_ties_single_profile():
    br = TypeBestResponse((frozenset({1}), frozenset({0}), frozenset({2})), (1, 2, 3))
    part = discrete_partition(("a", "b", "c"))
    (profile,) = enumerate_selections(br, part)
    assert profile.strategy == (1, 0, 2)


def test_d1_pattern_sets(car):
    br = type_best_messages(car, zone_receiver_strategy("D1"))
    profile = next(p for p in enumerate_selections(br, car.partition) if p.strategy == (M1, M2, M1))
    assert optimal_message_set(profile, 0) == {M1, M2}
    assert optimal_message_set(profile, 1) == {M1}


def test_pattern_set_collapses_when_all_send_same(car):
    profile = profile_for(car, (M2, M2, M2))
    assert optimal_message_set(profile, 0) == {M2}
    assert optimal_message_set(profile, 1) == {M2}


def test_top_payoff_rule_drops_weaker_type():
    # D3 with c12 >= m2: t1 walks with 0, t2 sells at m2; only t2 shapes M*(t'1)
    p = CarTradeParams((2, 5, 10), (3, 6, 9), (7, 8, 4), Fraction(1, 2))
    game = build_cartrade_game(p)
    br = type_best_messages(game, zone_receiver_strategy("D3"))
    (profile,) = enumerate_selections(br, game.partition)
    assert profile.strategy == (M1, M2, M2)
    assert profile.pattern_message_sets == ({M2}, {M2})
    # the plain image would have included t1's message
    assert profile_for(game, profile.strategy).pattern_message_sets == ({M1, M2}, {M2})


@given(games(), st.data())
def test_per_type_sets_are_exact_argmax(game, data):
    s2 = tuple(data.draw(st.integers(0, game.n_actions - 1)) for _ in range(game.n_messages))
    br = type_best_messages(game, s2)
    for t in range(game.n_types):
        pay = [game.u1[t, m, s2[m]] for m in range(game.n_messages)]
        for m in br.per_type[t]:
            assert all(pay[m] >= x for x in pay)
        for m in range(game.n_messages):
            assert (m in br.per_type[t]) == (pay[m] == max(pay))
        assert br.values[t] == max(pay)


@given(games(), st.data(), st.integers(1, 7), st.integers(-5, 5))
def test_sender_argmax_invariant_under_affine_u1(game, data, c, d):
    s2 = tuple(data.draw(st.integers(0, game.n_actions - 1)) for _ in range(game.n_messages))
    t0 = data.draw(st.integers(0, game.n_types - 1))
    u1 = {k: (c * v + d if k[0] == t0 else v) for k, v in game.u1.items()}
    other = SignalingGame(game.types, game.partition, game.prior, game.messages, game.actions,
                          u1, game.u2)
    assert type_best_messages(game, s2).per_type[t0] == type_best_messages(other, s2).per_type[t0]


@given(games(), st.data())
def test_selection_count_and_invariants(game, data):
    s2 = tuple(data.draw(st.integers(0, game.n_actions - 1)) for _ in range(game.n_messages))
    br = type_best_messages(game, s2)
    profiles = enumerate_selections(br, game.partition)
    expected = 1
    for s in br.per_type:
        expected *= len(s)
    assert len(profiles) == expected
    assert len({p.strategy for p in profiles}) == expected
    assert [p.strategy for p in profiles] == sorted(p.strategy for p in profiles)
    for prof in profiles:
        assert all(prof.strategy[t] in br.per_type[t] for t in range(game.n_types))
        for b in range(game.n_patterns):
            members = game.partition.members(b)
            sent = {prof.strategy[t] for t in members}
            got = prof.pattern_message_sets[b]
            assert got and got <= sent and len(got) <= len(members)
            # messages of the best-off types are always included
            best = max(br.values[t] for t in members)
            assert {prof.strategy[t] for t in members if br.values[t] == best} == got


@given(games(discrete=True), st.data())
def test_discrete_partition_gives_classical_signal(game, data):
    s2 = tuple(data.draw(st.integers(0, game.n_actions - 1)) for _ in range(game.n_messages))
    for prof in enumerate_selections(type_best_messages(game, s2), game.partition):
        for t in range(game.n_types):
            assert optimal_message_set(prof, game.partition.pattern_of[t]) == {prof.strategy[t]}
