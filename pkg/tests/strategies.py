"""Hypothesis strategies for small monomial ideals."""

from hypothesis import strategies as st

from mideal.ring import MonomialIdeal, PolyRing

NAMES = ("x", "y", "z", "t")


@st.composite
def ideals(draw, names=NAMES, max_vars=3, max_gens=4, max_exp=3, proper=True, squarefree=False):
    n = draw(st.integers(1, max_vars))
    R = PolyRing(tuple(names[:n]))
    top = 1 if squarefree else max_exp
    mono = st.tuples(*[st.integers(0, top) for _ in range(n)])
    gens = draw(st.lists(mono, min_size=1, max_size=max_gens))
    if proper:
        gens = [g for g in gens if any(g)] or [tuple(1 if j == 0 else 0 for j in range(n))]
    return MonomialIdeal(R, gens)


@st.composite
def ideal_pairs(draw, **kw):
    """Two ideals in the same ring."""
    I = draw(ideals(**kw))
    n = I.ring.nvars
    mono = st.tuples(*[st.integers(0, kw.get("max_exp", 3)) for _ in range(n)])
    gens = [g for g in draw(st.lists(mono, min_size=1, max_size=kw.get("max_gens", 4))) if any(g)]
    return I, MonomialIdeal(I.ring, gens or [tuple(1 if j == n - 1 else 0 for j in range(n))])


@st.composite
def disjoint_pairs(draw, max_vars=2, **kw):
    I = draw(ideals(names=("a", "b", "c"), max_vars=max_vars, **kw))
    J = draw(ideals(names=("u", "v", "w"), max_vars=max_vars, **kw))
    return I, J
