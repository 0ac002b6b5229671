"""Initial degrees of symbolic powers and the Waldschmidt constant."""

from __future__ import annotations

from fractions import Fraction

from .decomposition import minimal_primes, symbolic_power
from .lp import OPTIMAL, solve_lp
from .ring import MonomialIdeal, initial_degree


class NotSquarefreeError(ValueError):
    pass


def waldschmidt_alpha(I: MonomialIdeal, m: int) -> int:
    """alpha(I^(m)), the least degree of a generator of the m-th symbolic power."""
    return initial_degree(symbolic_power(I, m))


def waldschmidt_sequence(I: MonomialIdeal, M: int) -> list[Fraction]:
    """Running minima of alpha(I^(m))/m for m = 1..M.

    By subadditivity of alpha along symbolic powers, every term is an upper
    bound for the Waldschmidt constant and the sequence is non-increasing.
    """
    out, best = [], None
    for m in range(1, M + 1):
        q = Fraction(waldschmidt_alpha(I, m), m)
        best = q if best is None or q < best else best
        out.append(best)
    return out


def waldschmidt_estimate(I: MonomialIdeal, M: int) -> Fraction:
    if M < 1:
        raise ValueError("M must be >= 1")
    return waldschmidt_sequence(I, M)[-1]


def is_squarefree(I: MonomialIdeal) -> bool:
    return all(e <= 1 for g in I.gens for e in g)


def waldschmidt_lp(I: MonomialIdeal):
    """The symbolic-polyhedron LP: minimise sum z subject to sum_{i in P} z_i >= 1."""
    n = I.ring.nvars
    cons = [([1 if j in P.support else 0 for j in range(n)], ">=", 1) for P in minimal_primes(I)]
    return [1] * n, cons


def waldschmidt_exact_squarefree(I: MonomialIdeal) -> Fraction:
    if not is_squarefree(I):
        raise NotSquarefreeError("the exact LP value is only valid for squarefree ideals")
    c, cons = waldschmidt_lp(I)
    res = solve_lp(c, cons)
    if res.status != OPTIMAL:
        raise RuntimeError(f"internal error: Waldschmidt LP is {res.status}")
    return res.value
