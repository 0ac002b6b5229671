import pytest
from hypothesis import given
from hypothesis import strategies as st

from mideal.decomposition import symbolic_power
from mideal.filtrations import (
    KINDS,
    BinomialSum,
    FiltrationAxiomError,
    FiltrationSpec,
    in_newton_polyhedron,
    integral_closure_power,
    quotient_module,
    tensor_module,
)
from mideal.homology import MonomialModule
from mideal.ring import MonomialIdeal, ideal, is_subset, power, product

from strategies import disjoint_pairs, ideals


def test_member_examples():
    assert FiltrationSpec(ideal("x", "x^2"), "ordinary").member(3) == ideal("x", "x^6")
    J = ideal("y,z,t", "y^4", "y^3*z", "y*z^3", "z^4", "y^2*z^2*t")
    assert FiltrationSpec(J, "symbolic").member(2) == power(ideal("y,z,t", "y", "z"), 8)
    assert integral_closure_power(ideal("x,y", "x^2", "y^2"), 1) == ideal("x,y", "x^2", "x*y", "y^2")
    assert FiltrationSpec(ideal("x", "x"), "ordinary").member(0).is_unit
    with pytest.raises(ValueError):
        FiltrationSpec(ideal("x", "x"), "bogus")


def test_binomial_sum_examples():
    BS = BinomialSum(FiltrationSpec(ideal("x", "x^2"), "ordinary"), FiltrationSpec(ideal("y", "y^3"), "ordinary"))
    assert BS.member(2) == ideal("x,y", "x^4", "x^2*y^3", "y^6")
    assert BS.member(0).is_unit
    assert BS.staged(2, 2) == BS.member(2)


def test_saturation_of_primary_ideal_is_not_a_filtration():
    F = FiltrationSpec(ideal("x,y", "x^2", "y"), "saturation")
    with pytest.raises(FiltrationAxiomError):
        F.check_axioms(2)


def test_tensor_of_principal_quotients():
    a = MonomialModule(ideal("x", "x"), ideal("x", "x^2"))
    b = MonomialModule(ideal("y", "y"), ideal("y", "y^2"))
    T = tensor_module(a, b)
    assert T.U == ideal("x,y", "x*y")
    assert T.V == ideal("x,y", "x^2*y", "x*y^2")


@given(ideals(max_gens=3, max_exp=2), st.sampled_from(KINDS))
def test_axioms_hold_when_first_step_is_proper(I, kind):
    F = FiltrationSpec(I, kind)
    if F.member(1).is_proper:
        assert F.axiom_violations(3) == []


@given(ideals(max_gens=3, max_exp=2))
def test_symbolic_superadditivity(I):
    F = FiltrationSpec(I, "symbolic")
    for a, b in ((1, 1), (1, 2)):
        assert is_subset(product(F.member(a), F.member(b)), F.member(a + b))


@given(ideals(max_gens=3, max_exp=2), st.integers(1, 2))
def test_integral_closure_by_box_enumeration(I, n):
    C = integral_closure_power(I, n)
    assert is_subset(power(I, n), C)
    # every generator is in the Newton polyhedron, and dropping any exponent leaves it
    for g in C.gens:
        assert in_newton_polyhedron(I, g, n)
        for j in range(len(g)):
            if g[j]:
                h = list(g)
                h[j] -= 1
                assert not in_newton_polyhedron(I, h, n)


@given(disjoint_pairs(max_exp=2, max_gens=3), st.integers(1, 3))
def test_symbolic_binomial_expansion(pair, n):
    from mideal.ring import extend, ideal_sum, join_rings

    I, J = pair
    R = join_rings(I.ring, J.ring)
    K = ideal_sum(extend(I, I.ring, R), extend(J, J.ring, R))
    BS = BinomialSum(FiltrationSpec(I, "symbolic"), FiltrationSpec(J, "symbolic"))
    assert BS.member(n) == symbolic_power(K, n)
    M = quotient_module(BS, n)
    assert M.U == BS.member(n)
