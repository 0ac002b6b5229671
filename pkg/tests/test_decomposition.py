import itertools

import pytest
from hypothesis import given

from mideal.decomposition import (
    ImproperIdealError,
    MonomialPrime,
    ass_of_power,
    associated_primes,
    dim_quotient,
    height,
    irreducible_decomposition,
    minimal_primes,
    symbolic_power,
    symbolic_power_via_components,
    verify_ass_sum,
)
from mideal.ring import (
    colon_monomial,
    contains,
    extend,
    ideal,
    ideal_sum,
    intersect_all,
    is_subset,
    join_rings,
    localize,
    power,
    product,
    unit_ideal,
    variables_ideal,
)

from strategies import disjoint_pairs, ideals


def primes(I, *names):
    return {MonomialPrime(I.ring, [I.ring.index(v) for v in grp]) for grp in names}


def test_decomposition_examples():
    I = ideal("x,y", "x^2", "x*y")
    assert {c.as_ideal() for c in irreducible_decomposition(I)} == {ideal("x,y", "x"), ideal("x,y", "x^2", "y")}
    assert {c.as_ideal() for c in irreducible_decomposition(ideal("x,y", "x*y"))} == \
        {ideal("x,y", "x"), ideal("x,y", "y")}
    K = ideal("x,y", "x^2", "y^3")
    assert [c.as_ideal() for c in irreducible_decomposition(K)] == [K]


def test_prime_examples():
    I = ideal("x,y", "x^2", "x*y")
    assert set(associated_primes(I)) == primes(I, "x", "xy")
    assert set(minimal_primes(I)) == primes(I, "x")
    T = ideal("x,y,z", "x*y", "y*z", "x*z")
    assert set(minimal_primes(T)) == set(associated_primes(T)) == primes(T, "xy", "yz", "xz")
    X = ideal("x", "x^5")
    assert set(associated_primes(X)) == set(minimal_primes(X)) == primes(X, "x")
    assert repr(sorted(associated_primes(I))[1]) == "(x,y)"


def test_dimension_examples():
    assert dim_quotient(ideal("x,y", "x")) == 1
    assert dim_quotient(ideal("x,y,z", "x*y", "y*z", "x*z")) == 1
    assert height(ideal("x,y,z", "x*y", "y*z", "x*z")) == 2
    with pytest.raises(ImproperIdealError):
        minimal_primes(unit_ideal(ideal("x", "x").ring))


def test_symbolic_examples():
    J = ideal("y,z,t", "y^4", "y^3*z", "y*z^3", "z^4", "y^2*z^2*t")
    yz = variables_ideal(J.ring, [0, 1])
    assert symbolic_power(J, 1) == power(yz, 4)
    assert symbolic_power(J, 2) == power(yz, 8)
    assert symbolic_power(ideal("x,y", "x"), 3) == ideal("x,y", "x^3")
    I = ideal("x,y", "x^2", "x*y")
    assert symbolic_power(I, 1) == ideal("x,y", "x")
    assert symbolic_power(I, 2) == ideal("x,y", "x^2")


def test_ass_of_power_examples():
    assert set(ass_of_power(ideal("x", "x"), 3)) == primes(ideal("x", "x"), "x")
    I = ideal("x,y", "x^2", "x*y")
    assert set(ass_of_power(I, 1)) == primes(I, "x", "xy")


def test_ass_sum_example():
    I, J = ideal("x,y", "x^2", "x*y"), ideal("u", "u")
    rep = verify_ass_sum(I, J)
    assert rep.passed
    R = join_rings(I.ring, J.ring)
    K = ideal_sum(extend(I, I.ring, R), extend(J, J.ring, R))
    assert {tuple(P.names()) for P in associated_primes(K)} == {("x", "u"), ("x", "y", "u")}


@given(ideals(max_gens=5))
def test_decomposition_is_sound_and_irredundant(I):
    comps = [c.as_ideal() for c in irreducible_decomposition(I)]
    assert intersect_all(comps, I.ring) == I
    for k in range(len(comps)):
        rest = comps[:k] + comps[k + 1:]
        if rest:
            assert intersect_all(rest, I.ring) != I


@given(ideals(max_gens=4))
def test_minimal_primes_by_brute_force(I):
    n = I.ring.nvars
    containing = [frozenset(s) for r in range(n + 1) for s in itertools.combinations(range(n), r)
                  if is_subset(I, variables_ideal(I.ring, s))]
    minimal = {s for s in containing if not any(o < s for o in containing)}
    assert {P.support for P in minimal_primes(I)} == minimal


@given(ideals(max_gens=4))
def test_grid_ass_matches_decomposition(I):
    assert associated_primes(I, method="grid") == associated_primes(I, method="decomposition")


@given(ideals(max_gens=3, max_exp=2))
def test_symbolic_containments(I):
    S = {n: symbolic_power(I, n) for n in (1, 2, 3)}
    for n in (1, 2, 3):
        assert is_subset(power(I, n), S[n])
    assert is_subset(S[2], S[1]) and is_subset(S[3], S[2])
    assert is_subset(product(S[1], S[2]), S[3])
    assert S[2] == symbolic_power_via_components(I, 2)


@given(ideals(max_gens=3, max_exp=2))
def test_localization_consistency(I):
    for n in (1, 2):
        Sn = symbolic_power(I, n)
        for P in minimal_primes(I):
            assert localize(Sn, P.support) == localize(power(I, n), P.support)


@given(ideals(max_gens=3, max_exp=2))
def test_no_embedded_primes_gives_ordinary_powers(I):
    if all(set(ass_of_power(I, n)) == set(minimal_primes(I)) for n in (1, 2)):
        assert symbolic_power(I, 2) == power(I, 2)


@given(disjoint_pairs())
def test_ass_sum_always_passes(pair):
    assert verify_ass_sum(*pair).passed


def test_associated_prime_has_witness():
    # P in Ass(S/I) iff P = I : m for some monomial m; spot-check the witness direction
    I = ideal("x,y,z", "x^2", "x*y", "y*z^2")
    for P in associated_primes(I):
        found = False
        for m in itertools.product(range(3), repeat=3):
            if contains(I, m):
                continue
            if colon_monomial(I, m) == P.as_ideal():
                found = True
                break
        assert found, P
