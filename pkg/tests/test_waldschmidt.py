from fractions import Fraction

import pytest
from hypothesis import given

from mideal.oracles import lp_by_vertex_enumeration
from mideal.ring import extend, ideal, ideal_sum, join_rings
from mideal.waldschmidt import (
    NotSquarefreeError,
    waldschmidt_alpha,
    waldschmidt_estimate,
    waldschmidt_exact_squarefree,
    waldschmidt_lp,
    waldschmidt_sequence,
)

from strategies import disjoint_pairs, ideals


def test_examples():
    X = ideal("x,y", "x")
    assert waldschmidt_exact_squarefree(X) == 1
    assert all(q == 1 for q in waldschmidt_sequence(X, 4))
    T = ideal("x,y,z", "x*y", "y*z", "x*z")
    assert waldschmidt_exact_squarefree(T) == Fraction(3, 2)
    c, cons = waldschmidt_lp(T)
    assert lp_by_vertex_enumeration(c, [a for a, _, _ in cons], [b for _, _, b in cons]) == Fraction(3, 2)
    assert waldschmidt_alpha(T, 2) == 3
    assert waldschmidt_estimate(T, 2) == Fraction(3, 2)
    with pytest.raises(NotSquarefreeError):
        waldschmidt_exact_squarefree(ideal("x", "x^2"))


@given(ideals(squarefree=True, max_gens=4))
def test_estimates_decrease_to_exact_value(I):
    exact = waldschmidt_exact_squarefree(I)
    c, cons = waldschmidt_lp(I)
    assert exact == lp_by_vertex_enumeration(c, [a for a, _, _ in cons], [b for _, _, b in cons])
    seq = waldschmidt_sequence(I, 4)
    assert all(a >= b for a, b in zip(seq, seq[1:]))
    assert all(q >= exact for q in seq)


@given(disjoint_pairs(squarefree=True, max_vars=3))
def test_min_law(pair):
    I, J = pair
    R = join_rings(I.ring, J.ring)
    K = ideal_sum(extend(I, I.ring, R), extend(J, J.ring, R))
    assert waldschmidt_exact_squarefree(K) == min(waldschmidt_exact_squarefree(I), waldschmidt_exact_squarefree(J))
