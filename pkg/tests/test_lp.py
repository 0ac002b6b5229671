from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from mideal.lp import INFEASIBLE, OPTIMAL, UNBOUNDED, feasible, solve_lp
from mideal.oracles import lp_by_vertex_enumeration


def test_simple_programs():
    r = solve_lp([1, 1], [([1, 2], ">=", 2), ([2, 1], ">=", 2)])
    assert r.status == OPTIMAL and r.value == Fraction(4, 3)
    assert solve_lp([1], [([1], "<=", -1)]).status == INFEASIBLE
    assert solve_lp([1], [([1], ">=", 0)], maximize=True).status == UNBOUNDED
    assert solve_lp([1, 1], [([1, 1], "==", 3)]).value == 3
    assert feasible([([1, 1], "==", 1), ([1, 0], "<=", Fraction(1, 2))], 2)


def test_degenerate_program_terminates():
    # a classic cycling example for the textbook pivot rule
    c = [Fraction(-3, 4), 150, Fraction(-1, 50), 6]
    cons = [([Fraction(1, 4), -60, Fraction(-1, 25), 9], "<=", 0),
            ([Fraction(1, 2), -90, Fraction(-1, 50), 3], "<=", 0),
            ([0, 0, 1, 0], "<=", 1)]
    r = solve_lp(c, cons)
    assert r.status == OPTIMAL and r.value == Fraction(-1, 20)


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.lists(st.integers(0, 3), min_size=n, max_size=n).filter(any), min_size=1, max_size=4),
    st.lists(st.integers(1, 3), min_size=n, max_size=n))))
def test_covering_programs_match_vertex_enumeration(data):
    n, A, c = data
    b = [1] * len(A)
    r = solve_lp(c, [(row, ">=", 1) for row in A])
    assert r.status == OPTIMAL
    assert r.value == lp_by_vertex_enumeration(c, A, b)
    assert all(sum(a * x for a, x in zip(row, r.x)) >= 1 for row in A)
