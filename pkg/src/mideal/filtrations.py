"""Filtrations of monomial ideals and their binomial sums.

Integral closure
----------------
``a`` lies in the integral closure of ``I^n`` iff ``a/n`` lies in the Newton
polyhedron of ``I``, i.e. some convex combination ``sum l_k g_k`` of the
generators with total weight ``n`` is componentwise ``<= a``.  That is an
LP feasibility question, solved exactly.

Minimal generators of the closure lie in the box ``[0, M]`` where ``M`` is the
componentwise maximum of the generators of ``I^n`` (``n`` times that of
``I``): if ``a_j > M_j`` then the witness ``sum l_k g_k`` has ``j``-th
coordinate ``<= M_j <= a_j - 1``, so ``a - e_j`` is in the closure too and
``a`` is not minimal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .decomposition import symbolic_power
from .homology import MonomialModule
from .lp import feasible
from .ring import (
    MonomialIdeal,
    PolyRing,
    contains,
    extend,
    is_subset,
    join_rings,
    maximal_ideal,
    power,
    product,
    saturate,
    unit_ideal,
)

KINDS = ("ordinary", "symbolic", "saturation", "integral_closure")


class FiltrationAxiomError(ValueError):
    """A provider failed Q_0 = R, Q_1 proper, or the descending chain condition."""


def in_newton_polyhedron(I: MonomialIdeal, a, n: int = 1) -> bool:
    """Is ``x^a`` in the integral closure of ``I^n``?"""
    G = I.gens
    k = len(G)
    cons = [([1] * k, "==", n)]
    for j in range(I.ring.nvars):
        cons.append(([g[j] for g in G], "<=", a[j]))
    return feasible(cons, k)


def integral_closure_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n == 0 or I.is_unit:
        return unit_ideal(I.ring)
    if I.is_zero:
        return I
    In = power(I, n)
    box = In.max_exponents()
    found: list[tuple[int, ...]] = []
    points = sorted(itertools.product(*(range(b + 1) for b in box)), key=lambda m: (sum(m), m))
    for a in points:
        if any(all(f[j] <= a[j] for j in range(len(a))) for f in found):
            continue
        if contains(In, a) or in_newton_polyhedron(I, a, n):
            found.append(a)
    return MonomialIdeal(I.ring, found)


@dataclass
class FiltrationSpec:
    """Rule producing the n-th ideal of a filtration built from ``base``."""

    base: MonomialIdeal
    kind: str = "symbolic"
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown filtration kind {self.kind!r}; expected one of {KINDS}")
        if not self.base.is_proper:
            raise ValueError("a filtration needs a proper nonzero base ideal")

    @property
    def ring(self) -> PolyRing:
        return self.base.ring

    def member(self, n: int) -> MonomialIdeal:
        if n < 0:
            raise ValueError("filtration index must be >= 0")
        if n == 0:
            return unit_ideal(self.ring)
        if n not in self._cache:
            I = self.base
            if self.kind == "ordinary":
                Q = power(I, n)
            elif self.kind == "symbolic":
                Q = symbolic_power(I, n)
            elif self.kind == "saturation":
                Q = saturate(power(I, n), maximal_ideal(self.ring))
            else:
                Q = integral_closure_power(I, n)
            self._cache[n] = Q
        return self._cache[n]

    def axiom_violations(self, bound: int) -> list[str]:
        out = []
        if not self.member(1).is_proper:
            out.append("member(1) is not a proper nonzero ideal")
        for n in range(bound):
            if not is_subset(self.member(n + 1), self.member(n)):
                out.append(f"member({n + 1}) is not contained in member({n})")
        return out

    def check_axioms(self, bound: int):
        bad = self.axiom_violations(bound)
        if bad:
            raise FiltrationAxiomError(f"{self.kind} filtration of {self.base}: " + "; ".join(bad))


def filtration_member(F: FiltrationSpec, n: int) -> MonomialIdeal:
    return F.member(n)


@dataclass
class BinomialSum:
    """Q_n = sum_{i+j=n} I_i J_j for filtrations over disjoint variable sets."""

    left: FiltrationSpec
    right: FiltrationSpec
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self.ring = join_rings(self.left.ring, self.right.ring)

    def left_ext(self, i: int) -> MonomialIdeal:
        return extend(self.left.member(i), self.left.ring, self.ring)

    def right_ext(self, j: int) -> MonomialIdeal:
        return extend(self.right.member(j), self.right.ring, self.ring)

    def term(self, i: int, j: int) -> MonomialIdeal:
        return product(self.left_ext(i), self.right_ext(j))

    def member(self, n: int) -> MonomialIdeal:
        if n < 0:
            raise ValueError("n must be >= 0")
        if n not in self._cache:
            gens = []
            for i in range(n + 1):
                gens.extend(self.term(i, n - i).gens)
            self._cache[n] = MonomialIdeal(self.ring, gens)
        return self._cache[n]

    def staged(self, n: int, t: int) -> MonomialIdeal:
        """P_{n,t} = I_n J_0 + ... + I_{n-t} J_t."""
        gens = []
        for s in range(t + 1):
            gens.extend(self.term(n - s, s).gens)
        return MonomialIdeal(self.ring, gens)


def binomial_sum(BS: BinomialSum, n: int) -> MonomialIdeal:
    return BS.member(n)


def quotient_module(BS: BinomialSum, n: int) -> MonomialModule:
    """Q_n / Q_{n+1}; raises if Q_{n+1} is not inside Q_n."""
    return MonomialModule(BS.member(n), BS.member(n + 1))


def successive_quotient(F: FiltrationSpec, i: int) -> MonomialModule:
    """I_i / I_{i+1} as a module over the base ring."""
    return MonomialModule(F.member(i), F.member(i + 1))


def tensor_module(Ma: MonomialModule, Mb: MonomialModule) -> MonomialModule:
    """(U/V) ⊗_k (U'/V') = UU' / (UV' + VU') in the joined ring."""
    R = join_rings(Ma.ring, Mb.ring)
    U, V = extend(Ma.U, Ma.ring, R), extend(Ma.V, Ma.ring, R)
    U2, V2 = extend(Mb.U, Mb.ring, R), extend(Mb.V, Mb.ring, R)
    num = product(U, U2)
    den = MonomialIdeal(R, product(U, V2).gens + product(V, U2).gens)
    return MonomialModule(num, den)


def quotient_ring_module(I: MonomialIdeal) -> MonomialModule:
    return MonomialModule.quotient(I)


__all__ = [
    "KINDS",
    "BinomialSum",
    "FiltrationAxiomError",
    "FiltrationSpec",
    "binomial_sum",
    "filtration_member",
    "in_newton_polyhedron",
    "integral_closure_power",
    "quotient_module",
    "successive_quotient",
    "tensor_module",
]
