from hypothesis import given, settings

from mideal.homology import MonomialModule
from mideal.ring import ideal
from mideal.verify import (
    linear_partner,
    verify_binomial_theorem,
    verify_depth_reg_formulas,
    verify_min_primes_of_sum,
    verify_product_depth_reg,
    verify_staged_splittings,
    verify_tensor_depth_reg,
    verify_tor_vanishing,
)

from strategies import disjoint_pairs, ideals

J_EX = ideal("y,z,t", "y^4", "y^3*z", "y*z^3", "z^4", "y^2*z^2*t")


def test_binomial_examples():
    assert verify_binomial_theorem(ideal("x", "x"), ideal("y", "y"), 3).passed
    assert verify_binomial_theorem(ideal("x,y", "x^2", "x*y"), ideal("u,v", "u*v"), 2).passed
    assert verify_binomial_theorem(ideal("x,y", "x^2", "x*y"), ideal("u,v", "u*v"), 2, kind="ordinary").passed


def test_formulas_on_worked_example():
    rep = verify_depth_reg_formulas(J_EX, ideal("u,v", "u^2", "u*v"), 2)
    assert rep.passed, rep.summary_lines()


def test_linear_special_case():
    assert linear_partner(ideal("u,v,w", "u*v", "v^2")) == ideal("u,v,w", "u", "v")
    rep = verify_depth_reg_formulas(ideal("x,y", "x^2", "x*y"), ideal("u,v", "u", "v"), 2, parts=["linear"])
    assert rep.passed


def test_maximal_ideals():
    rep = verify_depth_reg_formulas(ideal("x,y", "x", "y"), ideal("u,v", "u", "v"), 2)
    assert rep.passed


def test_tensor_examples():
    k = MonomialModule.quotient(ideal("x", "x"))
    assert verify_tensor_depth_reg(k, MonomialModule.quotient(ideal("y", "y"))).passed
    a = MonomialModule(ideal("x", "x"), ideal("x", "x^2"))
    b = MonomialModule(ideal("y", "y"), ideal("y", "y^2"))
    assert verify_tensor_depth_reg(a, b).passed
    assert verify_product_depth_reg(ideal("x,y", "x^2", "x*y"), ideal("u", "u^3")).passed


def test_tor_vanishing_on_worked_example():
    assert verify_tor_vanishing(J_EX, 3).passed


@settings(max_examples=15)
@given(disjoint_pairs(max_exp=2, max_gens=3))
def test_formulas_on_random_pairs(pair):
    I, J = pair
    rep = verify_depth_reg_formulas(I, J, 2)
    assert rep.passed, rep.summary_lines()


@settings(max_examples=15)
@given(disjoint_pairs(max_exp=2, max_gens=3))
def test_staged_splittings_and_dimension(pair):
    assert verify_staged_splittings(*pair, 2).passed
    assert verify_min_primes_of_sum(*pair).passed


@settings(max_examples=15)
@given(disjoint_pairs(max_exp=2, max_gens=3))
def test_tensor_additivity(pair):
    I, J = pair
    assert verify_tensor_depth_reg(MonomialModule.quotient(I), MonomialModule.quotient(J)).passed
    assert verify_tensor_depth_reg(MonomialModule.of_ideal(I), MonomialModule.quotient(J)).passed


@settings(max_examples=15)
@given(ideals(max_gens=3, max_exp=2))
def test_tor_vanishing_random(I):
    assert verify_tor_vanishing(I, 2).passed


def test_reports_are_deterministic():
    a = verify_depth_reg_formulas(J_EX, ideal("u", "u^2"), 1).to_json()
    b = verify_depth_reg_formulas(J_EX, ideal("u", "u^2"), 1).to_json()
    assert a == b and '"seconds"' not in a
