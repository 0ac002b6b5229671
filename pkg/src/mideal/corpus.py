"""Fixed-seed random corpora used by the verification suite.

Every ideal has at most 4 generators in at most 3 variables with exponents
at most 4.  The left factor uses variables a, b, c and the right factor
u, v, w so that pairs always live in disjoint rings.
"""

from __future__ import annotations

import random

from .ring import MonomialIdeal, PolyRing

BINOMIAL_SEED = 20240101
FORMULA_SEED = 20240202
SQUAREFREE_SEED = 20240303
LEFT_VARS = ("a", "b", "c")
RIGHT_VARS = ("u", "v", "w")


def random_ideal(rng: random.Random, names, max_vars=3, max_gens=4, max_exp=4,
                 squarefree=False) -> MonomialIdeal:
    while True:
        # bias towards more variables; one-variable rings are rarely interesting
        n = rng.choice([k for k in range(1, max_vars + 1) for _ in range(k)])
        if squarefree:
            n = max_vars
        R = PolyRing(tuple(names[:n]))
        top = 1 if squarefree else max_exp
        gens = [tuple(rng.randint(0, top) for _ in range(n)) for _ in range(rng.randint(1, max_gens))]
        I = MonomialIdeal(R, gens)
        if I.is_proper:
            return I


def random_pairs(count: int, seed: int, **kw) -> list[tuple[MonomialIdeal, MonomialIdeal]]:
    rng = random.Random(seed)
    return [(random_ideal(rng, LEFT_VARS, **kw), random_ideal(rng, RIGHT_VARS, **kw)) for _ in range(count)]


def binomial_corpus() -> list[tuple[MonomialIdeal, MonomialIdeal]]:
    return random_pairs(50, BINOMIAL_SEED)


def formula_corpus() -> list[tuple[MonomialIdeal, MonomialIdeal]]:
    return random_pairs(20, FORMULA_SEED)


def squarefree_corpus() -> list[tuple[MonomialIdeal, MonomialIdeal]]:
    return random_pairs(10, SQUAREFREE_SEED, squarefree=True)


def corpus_ideals() -> list[MonomialIdeal]:
    """Distinct single ideals appearing in the binomial and formula corpora."""
    seen, out = set(), []
    for I, J in binomial_corpus() + formula_corpus():
        for K in (I, J):
            if K not in seen:
                seen.add(K)
                out.append(K)
    return out
