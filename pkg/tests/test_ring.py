import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mideal.oracles import brute_force_member_box
from mideal.ring import (
    IdealFormatError,
    MonomialIdeal,
    PolyRing,
    colon,
    contains,
    extend,
    from_json,
    ideal,
    ideal_eq,
    ideal_sum,
    intersect,
    is_subset,
    join_rings,
    minimalize,
    normalize,
    power,
    product,
    radical,
    rename,
    saturate,
    substitute_one,
    to_json,
    to_m2,
    unit_ideal,
)

from strategies import disjoint_pairs, ideal_pairs, ideals

R2 = PolyRing(("x", "y"))


def test_normalize_examples():
    x = PolyRing(("x",))
    assert MonomialIdeal(x, [(1,), (2,)]).gens == ((1,),)
    assert MonomialIdeal(R2, []).is_zero
    assert MonomialIdeal(R2, [(2, 1), (1, 2), (2, 2)]).gens == ((2, 1), (1, 2))


def test_arithmetic_examples():
    assert product(ideal("x,y", "x"), ideal("x,y", "y")) == ideal("x,y", "x*y")
    assert power(ideal("x,y", "x^2", "x*y"), 2) == ideal("x,y", "x^4", "x^3*y", "x^2*y^2")
    assert ideal_sum(ideal("x,y", "x^2"), ideal("x,y", "y^3")) == ideal("x,y", "x^2", "y^3")
    assert intersect(ideal("x,y", "x"), ideal("x,y", "y")) == ideal("x,y", "x*y")


def test_intersect_against_brute_force():
    I, J = ideal("x,y", "x^2", "y"), ideal("x,y", "x", "y^2")
    K = intersect(I, J)
    assert K == ideal("x,y", "x^2", "x*y", "y^2")
    box = (3, 3)
    assert brute_force_member_box(K, box) == brute_force_member_box(I, box) & brute_force_member_box(J, box)


def test_colon_and_saturation_examples():
    assert colon(ideal("x,y", "x^2*y"), ideal("x,y", "y")) == ideal("x,y", "x^2")
    assert colon(ideal("x,y", "x^2", "x*y"), ideal("x,y", "x")) == ideal("x,y", "x", "y")
    assert saturate(ideal("x,y", "x^2", "x*y"), ideal("x,y", "y")) == ideal("x,y", "x")


def test_radical_examples():
    assert radical(ideal("x,y", "x^4", "x^3*y")) == ideal("x,y", "x")
    J = ideal("y,z,t", "y^4", "y^3*z", "y*z^3", "z^4", "y^2*z^2*t")
    assert radical(J) == ideal("y,z,t", "y", "z")
    assert radical(unit_ideal(R2)).is_unit


def test_membership_examples():
    assert contains(ideal("x,y", "x*y"), (2, 1))
    assert ideal_eq(ideal("x,y", "x", "y"), ideal("x,y", "y", "x"))
    assert not contains(ideal("x,y", "x^2", "y^2"), (1, 1))


def test_ring_changes():
    A, B = PolyRing(("x",)), PolyRing(("y",))
    R = join_rings(A, B)
    assert R.vars == ("x", "y")
    with pytest.raises(ValueError):
        join_rings(A, A)
    assert extend(MonomialIdeal(A, [(2,)]), A, R) == ideal("x,y", "x^2")
    assert substitute_one(ideal("x,y", "x^2*y", "y^3"), "y").is_unit
    J = ideal("y,z,t", "y^4", "y^3*z", "y*z^3", "z^4", "y^2*z^2*t")
    # the substituted variable leaves the ring
    assert substitute_one(J, "t") == power(ideal("y,z", "y", "z"), 4)
    assert rename(ideal("x", "x"), {"x": "t"}) == ideal("t", "t")


def test_json_format_and_errors():
    I = ideal("x,y", "x^2", "x*y")
    assert to_json(I) == '{"ring": {"vars": ["x","y"]}, "gens": [[2,0],[1,1]]}'
    assert to_m2(I) == "ideal(x^2, x*y)"
    with pytest.raises(IdealFormatError, match="line 1 column"):
        from_json('{"ring": ')
    with pytest.raises(IdealFormatError, match=r"gens\[1\]"):
        from_json('{"ring": {"vars": ["x"]}, "gens": [[1], [1, 2]]}')
    with pytest.raises(IdealFormatError, match=r"gens\[0\]\[0\]"):
        from_json('{"ring": {"vars": ["x"]}, "gens": [[-1]]}')


def test_minimalize_large_input_matches_pairwise():
    vs = list(itertools.product(range(4), repeat=3))
    got = minimalize(vs)
    assert got == [(0, 0, 0)]
    vs = [v for v in vs if sum(v) >= 4]
    want = sorted({v for v in vs if sum(v) == 4}, key=lambda m: (sum(m), tuple(-e for e in m)))
    assert minimalize(vs) == want


@given(ideals(proper=False))
def test_normalize_idempotent_and_order_insensitive(I):
    assert normalize(I.gens, I.ring) == I
    assert normalize(reversed(I.gens), I.ring) == I


@given(ideal_pairs())
def test_intersection_and_product_containments(pair):
    I, J = pair
    K = intersect(I, J)
    assert is_subset(K, I) and is_subset(K, J)
    assert is_subset(product(I, J), K)


@given(disjoint_pairs())
def test_disjoint_intersection_is_product(pair):
    I, J = pair
    R = join_rings(I.ring, J.ring)
    Ie, Je = extend(I, I.ring, R), extend(J, J.ring, R)
    assert intersect(Ie, Je) == product(Ie, Je)


@given(ideals(max_gens=3), st.integers(0, 3), st.integers(0, 3))
def test_power_additivity(I, a, b):
    assert power(I, a + b) == product(power(I, a), power(I, b))


@given(ideal_pairs())
def test_saturation_is_colon_stable(pair):
    I, J = pair
    S = saturate(I, J)
    assert colon(S, J) == S


@given(ideal_pairs(max_exp=2))
def test_ops_agree_with_brute_force_membership(pair):
    I, J = pair
    box = tuple(4 for _ in I.ring.vars)
    mi, mj = brute_force_member_box(I, box), brute_force_member_box(J, box)
    assert brute_force_member_box(intersect(I, J), box) == mi & mj
    assert brute_force_member_box(ideal_sum(I, J), box) == mi | mj


@given(ideals(proper=False))
def test_json_round_trip(I):
    assert from_json(to_json(I)) == I
