from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from patternsig.beliefs import (conditional_message_dist, incentive_patterns, posterior,
                                posterior_profile)
from patternsig.model import SignalingGame, coarsest_partition
from patternsig.sender import SelectionProfile, enumerate_selections, type_best_messages

from conftest import games

M1, M2, M3 = 0, 1, 2


def profile(*sets):
    return SelectionProfile((), tuple(frozenset(s) for s in sets))


def test_uniform_over_two_messages(car):
    dist = conditional_message_dist(profile({M1, M2}, {M1}), car)
    assert dist.table[0] == (Fraction(1, 2), Fraction(1, 2), 0)
    assert dist.table[1] == (1, 0, 0)


def test_single_message_gets_full_mass(car):
    dist = conditional_message_dist(profile({M3}, {M3}), car)
    assert dist(M3, 0) == dist(M3, 1) == 1
    assert dist(M1, 0) == dist(M2, 1) == 0


def test_all_messages_uniform(car):
    dist = conditional_message_dist(profile({M1, M2, M3}, {M1, M2, M3}), car)
    assert all(x == Fraction(1, 3) for row in dist.table for x in row)


def test_incentive_patterns():
    prof = profile({M1, M2}, {M1})
    assert incentive_patterns(M1, prof) == {0, 1}
    assert incentive_patterns(M2, prof) == {0}
    assert incentive_patterns(M3, prof) == set()
    pooled = profile({M2}, {M2})
    assert incentive_patterns(M2, pooled) == {0, 1}
    assert incentive_patterns(M1, pooled) == incentive_patterns(M3, pooled) == set()


def test_single_pattern_incentives():
    prof = profile({M2})
    assert [incentive_patterns(m, prof) for m in range(3)] == [set(), {0}, set()]


@pytest.mark.parametrize("alpha", [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)])
def test_semi_pooling_posterior(car, alpha):
    prior = (alpha, 1 - alpha)
    dist = conditional_message_dist(profile({M1, M2}, {M1}), car)
    q = posterior(prior, dist, M1)
    assert tuple(q) == (alpha / (2 - alpha), (2 - 2 * alpha) / (2 - alpha))
    assert tuple(posterior(prior, dist, M2)) == (1, 0)
    assert posterior(prior, dist, M3) is None


def test_posterior_at_half(car):
    dist = conditional_message_dist(profile({M1, M2}, {M1}), car)
    q = posterior(car.prior, dist, M1)
    assert tuple(q) == (Fraction(1, 3), Fraction(2, 3))
    # straight Bayes: (1/2 * 1/2) / (1/2 * 1/2 + 1/2 * 1)
    assert q[0] == Fraction(1, 4) / (Fraction(1, 4) + Fraction(1, 2))


@given(games(), st.data())
def test_rows_posteriors_and_bayes_identity(game, data):
    s2 = tuple(data.draw(st.integers(0, game.n_actions - 1)) for _ in range(game.n_messages))
    for prof in enumerate_selections(type_best_messages(game, s2), game.partition)[:4]:
        dist = conditional_message_dist(prof, game)
        for row in dist.table:
            assert sum(row) == 1
        post = posterior_profile(game, dist)
        assert set(post.on_path) | post.off_path == set(range(game.n_messages))
        assert not set(post.on_path) & post.off_path
        for m, q in post.on_path.items():
            senders = incentive_patterns(m, prof)
            assert sum(q) == 1
            denom = sum(game.prior[s] * dist(m, s) for s in senders)
            for p in range(game.n_patterns):
                if p not in senders:
                    assert q[p] == 0
                assert q[p] * denom == game.prior[p] * dist(m, p)


@given(games(), st.data())
def test_pattern_separating_gives_point_masses(game, data):
    P, J = game.n_patterns, game.n_messages
    if P > J:
        return
    msgs = data.draw(st.permutations(range(J)))[:P]
    prof = profile(*({m} for m in msgs))
    post = posterior_profile(game, conditional_message_dist(prof, game))
    for p, m in enumerate(msgs):
        assert post.on_path[m][p] == 1
