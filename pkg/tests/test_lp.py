import random
from fractions import Fraction

from hypothesis import given, strategies as st

from patternsig.lp import feasible_point, simplex_point
from patternsig.oracle import _exists_simplex_point

from conftest import rationals


def test_simple_system():
    x = feasible_point([[1, 1], [1, -1]], [2, 0])
    assert x == (1, 1)


def test_infeasible_system():
    assert feasible_point([[1, 1]], [-1]) is None


def test_negative_rhs_normalized():
    x = feasible_point([[-1, -1]], [-3])
    assert sum(x) == 3 and all(v >= 0 for v in x)


def test_simplex_point_interior_only():
    # q0 >= q1 and q1 >= q0 forces the midpoint
    q = simplex_point(2, [[1, -1], [-1, 1]])
    assert q == (Fraction(1, 2), Fraction(1, 2))


def test_simplex_point_without_constraints():
    q = simplex_point(3, [])
    assert sum(q) == 1


def test_simplex_point_infeasible():
    assert simplex_point(2, [[-1, -1]]) is None


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.lists(rationals(), min_size=n, max_size=n), max_size=4))))
def test_agrees_with_vertex_enumeration(case):
    n, rows = case
    q = simplex_point(n, rows)
    assert (q is not None) == _exists_simplex_point(n, rows)
    if q is not None:
        assert sum(q) == 1 and all(x >= 0 for x in q)
        assert all(sum(g[i] * q[i] for i in range(n)) >= 0 for g in rows)


def test_degenerate_random_systems():
    # many zero right-hand sides: Bland's rule must not cycle
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(2, 5)
        rows = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(rng.randint(1, 6))]
        q = simplex_point(n, rows)
        assert (q is not None) == _exists_simplex_point(n, rows)
