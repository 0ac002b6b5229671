"""Exact computations with monomial ideals: symbolic powers, Betti numbers,
depth and regularity, binomial expansions and depth-function synthesis."""

from .ring import (
    MonomialIdeal,
    PolyRing,
    ideal,
    ideal_eq,
    ideal_sum,
    intersect,
    power,
    product,
)
from .decomposition import (
    MonomialPrime,
    associated_primes,
    irreducible_decomposition,
    minimal_primes,
    symbolic_power,
)
from .linalg import FieldSpec
from .homology import BettiTable, MonomialModule, betti_table, depth_quotient, regularity

__all__ = [
    "BettiTable",
    "FieldSpec",
    "MonomialIdeal",
    "MonomialModule",
    "MonomialPrime",
    "PolyRing",
    "associated_primes",
    "betti_table",
    "depth_quotient",
    "ideal",
    "ideal_eq",
    "ideal_sum",
    "intersect",
    "irreducible_decomposition",
    "minimal_primes",
    "power",
    "product",
    "regularity",
    "symbolic_power",
]
