from fractions import Fraction

import pytest
from hypothesis import strategies as st

from patternsig.cartrade import DEFAULT_PARAMS, build_cartrade_game
from patternsig.model import SignalingGame, make_partition


@pytest.fixture
def car():
    return build_cartrade_game(DEFAULT_PARAMS)


def rationals(max_den=12, span=6):
    return st.builds(Fraction, st.integers(-span, span), st.integers(1, max_den))


@st.composite
def games(draw, min_types=2, max_types=4, max_messages=3, max_actions=3, discrete=False):
    K = draw(st.integers(min_types, max_types))
    J = draw(st.integers(1, max_messages))
    L = draw(st.integers(1, max_actions))
    types = tuple(f"t{i + 1}" for i in range(K))
    if discrete:
        labels = list(range(K))
    else:
        labels = draw(st.lists(st.integers(0, K - 1), min_size=K, max_size=K))
    # relabel block ids densely in first-appearance order
    dense = {}
    for b in labels:
        dense.setdefault(b, len(dense))
    blocks = [set() for _ in dense]
    for t, b in enumerate(labels):
        blocks[dense[b]].add(t)
    partition = make_partition(types, blocks)
    weights = draw(st.lists(st.integers(1, 12), min_size=len(blocks), max_size=len(blocks)))
    prior = tuple(Fraction(w, sum(weights)) for w in weights)
    keys = [(t, m, a) for t in range(K) for m in range(J) for a in range(L)]
    u1 = {k: draw(rationals()) for k in keys}
    u2 = {k: draw(rationals()) for k in keys}
    return SignalingGame(types, partition, prior, tuple(f"m{j + 1}" for j in range(J)),
                         tuple(f"a{l + 1}" for l in range(L)), u1, u2)


@st.composite
def beliefs(draw, n):
    raw = draw(st.lists(st.integers(0, 12), min_size=n, max_size=n).filter(lambda xs: sum(xs) > 0))
    return tuple(Fraction(x, sum(raw)) for x in raw)


# acceptance results, printed once at the end of the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
