import pytest
from hypothesis import given
from hypothesis import strategies as st

from mideal.decomposition import associated_primes, maximal_prime
from mideal.depthsynth import (
    BlockVerificationError,
    BudgetExceededError,
    DepthFunctionSpec,
    GlueHypothesisError,
    _verify_block,
    block_constant1,
    block_mst,
    block_type1,
    block_type2,
    claimed_profile,
    decompose_profile,
    depth_profile,
    glue_additive,
    glue_reduction,
    ratliff_ideal,
    synthesize_depth_ideal,
    verify_ass_control,
)
from mideal.ring import ideal


def test_block_generators():
    assert block_type1(2).ideal == ideal("x,y,z", "x^4", "x^3*y", "x*y^3", "y^4", "x^2*y^2*z")
    assert block_type1(3).ideal == ideal("x,y,z", "x^5", "x^4*y", "x*y^4", "y^5", "x^3*y^2*z")
    assert block_mst(2).ideal == ideal("t,u,v", "t^3", "t*u*v", "u^2*v")
    assert block_mst(3).ideal == ideal("t,u,v", "t^4", "t*u^2*v", "u^3*v")


def test_block_profiles():
    for d in (2, 3):
        assert depth_profile(block_type1(d).ideal, d + 2) == claimed_profile("typeI", d).values(d + 2)
    assert depth_profile(block_mst(2).ideal, 4) == [1, 1, 0, 0]
    assert depth_profile(block_type2(1).ideal, 4) == [1, 0, 0, 0]
    assert depth_profile(block_type2(3).ideal, 5) == [0, 0, 1, 0, 0]


def test_spike_glue():
    S, Q = glue_reduction(block_type1(2).ideal, block_mst(2).ideal, [("y", "u"), ("z", "v")])
    assert S.vars == ("x", "t", "u", "v")
    hh = ideal(S, "x^4", "x^3*u", "x*u^3", "u^4", "x^2*u^2*v")
    from mideal.ring import product

    assert Q == product(hh, ideal(S, "t^3", "t*u*v", "u^2*v"))
    assert depth_profile(Q, 4) == [0, 1, 0, 0]


def test_glue_hypothesis_violation():
    # leaving z unidentified: z is not in the radical (x, y) of the step-up block
    with pytest.raises(GlueHypothesisError):
        glue_reduction(block_type1(2).ideal, block_mst(2).ideal, [("x", "u"), ("y", "v")])


def test_additive_glue_examples():
    S, Q = glue_additive(ideal("x,a", "x"), "x", ideal("y,b", "y"), "y")
    assert S.vars == ("x", "a", "b") and Q == ideal(S, "x^2")
    assert depth_profile(Q, 3) == [2, 2, 2]
    blocks = [block_constant1(str(k)) for k in range(3)]
    Q, S = blocks[0].ideal, blocks[0].ideal.ring
    for b in blocks[1:]:
        S, Q = glue_additive(Q, S.vars[0], b.ideal, b.ideal.ring.vars[0])
    assert depth_profile(Q, 3) == [3, 3, 3]


def test_decompose_examples():
    assert decompose_profile(DepthFunctionSpec((0, 0, 1), 1)) == [("typeI", 3)]
    assert decompose_profile(DepthFunctionSpec((1, 2, 1), 1)) == [("constant1", 0), ("typeII", 2)]
    assert decompose_profile(DepthFunctionSpec((0, 2, 1), 1)) == [("typeI", 2), ("typeII", 2)]
    assert decompose_profile(DepthFunctionSpec((1, 0, 2), 2)) == [("typeI", 3), ("typeI", 3), ("typeII", 1)]


@given(st.lists(st.integers(0, 3), max_size=6), st.integers(0, 3))
def test_decomposition_is_exact(prefix, tail):
    f = DepthFunctionSpec(tuple(prefix), tail)
    total = DepthFunctionSpec((), 0)
    for kind, d in decompose_profile(f):
        total = total + claimed_profile(kind, d)
    assert all(total(n) == f(n) for n in range(1, len(prefix) + 4))


def test_synthesis_examples():
    r = synthesize_depth_ideal(DepthFunctionSpec((), 1), verify_up_to=3)
    assert r.ideal == ideal("x1,w1", "x1") and r.report.passed
    r = synthesize_depth_ideal(DepthFunctionSpec((0,), 1), verify_up_to=4)
    assert [b.label for b in r.blocks] == ["typeI(2)"] and r.report.passed
    r = synthesize_depth_ideal(DepthFunctionSpec((1, 2, 1), 1), verify_up_to=4)
    assert r.report.passed and [c for _, _, c in r.table] == [1, 2, 1, 1]


def test_budget_and_block_claims():
    with pytest.raises(BudgetExceededError):
        synthesize_depth_ideal(DepthFunctionSpec((0, 3, 0), 0), budget=6)
    b = block_type1(2)
    b.claimed_profile = DepthFunctionSpec((1,), 1)
    with pytest.raises(BlockVerificationError):
        _verify_block(b, 3, None)


def test_ratliff_small_sets():
    for gamma in ({1}, {2}):
        res, rep = ratliff_ideal(gamma)
        assert rep.passed
        m = maximal_prime(res.ring)
        from mideal.ring import power

        assert (m in associated_primes(power(res.ideal, 1))) == (1 in gamma)


def test_ass_control_examples():
    assert verify_ass_control(ideal("x", "x"), "x", ideal("y", "y"), "y").passed
    assert verify_ass_control(block_type1(2).ideal, "y", block_mst(2).ideal, "u").passed
    # x lies in no associated prime of I, so only the first two parts contribute
    assert verify_ass_control(ideal("x,a", "a^2"), "x", ideal("y,b", "y*b"), "y").passed


def test_block_profiles_in_characteristic_two():
    # the block families are computed at p = 2 as well; observed to agree with p = 32003
    for b, N in ((block_type1(2), 4), (block_type1(3), 5), (block_mst(2), 4), (block_type2(2), 4), (block_type2(1), 4)):
        assert depth_profile(b.ideal, N, 2) == depth_profile(b.ideal, N, 32003) == b.claimed_profile.values(N)
