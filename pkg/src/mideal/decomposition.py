"""Irreducible decomposition, associated primes and symbolic powers."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .ring import (
    MonomialIdeal,
    PolyRing,
    RingMismatchError,
    extend,
    ideal_sum,
    intersect_all,
    join_rings,
    localize,
    power,
    radical,
    variables_ideal,
)


class ImproperIdealError(ValueError):
    """The operation needs a proper, nonzero ideal."""


def _require_proper(I: MonomialIdeal):
    if not I.is_proper:
        raise ImproperIdealError("expected a proper nonzero monomial ideal")


@dataclass(frozen=True)
class MonomialPrime:
    """The prime generated by the variables with indices in ``support``."""

    ring: PolyRing
    support: frozenset[int]

    def __post_init__(self):
        support = frozenset(self.support)
        if any(j < 0 or j >= self.ring.nvars for j in support):
            raise ValueError("support index out of range")
        object.__setattr__(self, "support", support)

    def _key(self):
        return (self.ring.vars, len(self.support), tuple(sorted(self.support)))

    def __lt__(self, other: "MonomialPrime"):
        return self._key() < other._key()

    @property
    def height(self) -> int:
        return len(self.support)

    def names(self) -> list[str]:
        return [self.ring.vars[j] for j in sorted(self.support)]

    def as_ideal(self) -> MonomialIdeal:
        return variables_ideal(self.ring, self.support)

    def __repr__(self):
        return "(" + ",".join(self.names()) + ")"


@dataclass(frozen=True)
class IrreducibleComponent:
    """``(x_i^a_i : i in pure_powers)``, stored as sorted (index, exponent) pairs."""

    ring: PolyRing
    pure_powers: tuple[tuple[int, int], ...]

    @property
    def support(self) -> frozenset[int]:
        return frozenset(j for j, _ in self.pure_powers)

    def exponent(self, j: int) -> int | None:
        for i, a in self.pure_powers:
            if i == j:
                return a
        return None

    def as_ideal(self) -> MonomialIdeal:
        gens = []
        for j, a in self.pure_powers:
            e = [0] * self.ring.nvars
            e[j] = a
            gens.append(tuple(e))
        return MonomialIdeal(self.ring, gens)

    def radical(self) -> MonomialPrime:
        return MonomialPrime(self.ring, self.support)

    def contains_component(self, other: "IrreducibleComponent") -> bool:
        """True when ``other`` (as an ideal) is contained in ``self``."""
        mine = dict(self.pure_powers)
        return all(j in mine and mine[j] <= a for j, a in other.pure_powers)


def _is_pure_power(g) -> bool:
    return sum(1 for e in g if e) == 1


@lru_cache(maxsize=200_000)
def _split(ring: PolyRing, gens: tuple) -> frozenset:
    # Leaves are tuples of (index, exponent) pairs.
    mixed = [g for g in gens if not _is_pure_power(g)]
    if not mixed:
        return frozenset([tuple(sorted((next(j for j, e in enumerate(g) if e), max(g)) for g in gens))])
    g = max(mixed)  # lexicographically first in the x_1 > x_2 > ... order
    j = next(i for i, e in enumerate(g) if e)
    pure = [0] * ring.nvars
    pure[j] = g[j]
    rest = list(g)
    rest[j] = 0
    out = set()
    for extra in (tuple(pure), tuple(rest)):
        K = MonomialIdeal(ring, gens + (extra,))
        out |= _split(ring, K.gens)
    return frozenset(out)


def irreducible_decomposition(I: MonomialIdeal) -> tuple[IrreducibleComponent, ...]:
    """The irredundant irreducible decomposition of a proper nonzero ideal.

    Splits ``I = (I + x_j^a) ∩ (I + g/x_j^a)`` on the lexicographically first
    generator that is not a pure power, memoised on normalised ideals, then
    discards every component containing another one.
    """
    _require_proper(I)
    leaves = [IrreducibleComponent(I.ring, leaf) for leaf in _split(I.ring, I.gens)]
    comps = [c for c in leaves if not any(o != c and c.contains_component(o) for o in leaves)]
    comps.sort(key=lambda c: (len(c.pure_powers), c.pure_powers))
    return tuple(comps)


def associated_primes(I: MonomialIdeal, method: str = "auto") -> tuple[MonomialPrime, ...]:
    """Associated primes of ``S/I``.

    ``method="decomposition"`` reads radicals off the irreducible
    decomposition; ``method="grid"`` reads them off the degree complexes
    (see :mod:`mideal.localcoh`), which scales to ideals with thousands of
    generators.  ``auto`` picks by generator count.
    """
    _require_proper(I)
    if method == "auto":
        method = "decomposition" if I.ngens <= 40 else "grid"
    if method == "decomposition":
        primes = {c.radical() for c in irreducible_decomposition(I)}
    elif method == "grid":
        from .localcoh import associated_primes_grid
        primes = set(associated_primes_grid(I))
    else:
        raise ValueError(f"unknown method {method!r}")
    return tuple(sorted(primes))


def minimal_vertex_covers(ring: PolyRing, edges: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    """Inclusion-minimal index sets meeting every edge."""
    edges = sorted(set(edges), key=len)
    covers: list[frozenset[int]] = [frozenset()]
    for e in edges:
        nxt = set()
        for c in covers:
            if c & e:
                nxt.add(c)
            else:
                for v in e:
                    nxt.add(c | {v})
        covers = [c for c in nxt if not any(o < c for o in nxt)]
    return sorted(set(covers), key=lambda c: (len(c), sorted(c)))


def minimal_primes(I: MonomialIdeal) -> tuple[MonomialPrime, ...]:
    """Minimal primes of ``I``: minimal transversals of the generator supports."""
    _require_proper(I)
    edges = [frozenset(j for j, e in enumerate(g) if e) for g in radical(I).gens]
    return tuple(sorted(MonomialPrime(I.ring, c) for c in minimal_vertex_covers(I.ring, edges)))


def height(I: MonomialIdeal) -> int:
    return min(P.height for P in minimal_primes(I))


def dim_quotient(I: MonomialIdeal) -> int:
    """Krull dimension of ``S/I``."""
    if I.is_unit:
        raise ImproperIdealError("S/S is the zero module")
    if I.is_zero:
        return I.ring.nvars
    return I.ring.nvars - height(I)


def symbolic_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """``I^(n)``: intersect, over minimal primes σ, the localisation of I^n at σ.

    Localising a monomial ideal at a monomial prime and contracting back sets
    every variable outside the prime to 1, and that commutes with powers.
    """
    _require_proper(I)
    if n <= 0:
        raise ValueError("symbolic powers are defined for n >= 1")
    parts = [power(localize(I, P.support), n) for P in minimal_primes(I)]
    return intersect_all(parts)


def minimal_primary_components(I: MonomialIdeal) -> dict[MonomialPrime, MonomialIdeal]:
    """The primary components belonging to the minimal primes."""
    mins = set(minimal_primes(I))
    by_prime: dict[MonomialPrime, list[MonomialIdeal]] = {}
    for c in irreducible_decomposition(I):
        P = c.radical()
        if P in mins:
            by_prime.setdefault(P, []).append(c.as_ideal())
    return {P: intersect_all(parts) for P, parts in sorted(by_prime.items())}


def symbolic_power_via_components(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """``Q_1^n ∩ ... ∩ Q_s^n`` over minimal-prime primary components."""
    _require_proper(I)
    if n <= 0:
        raise ValueError("symbolic powers are defined for n >= 1")
    return intersect_all([power(Q, n) for Q in minimal_primary_components(I).values()])


def ass_of_power(I: MonomialIdeal, n: int, method: str = "auto") -> tuple[MonomialPrime, ...]:
    _require_proper(I)
    if n <= 0:
        raise ValueError("n must be >= 1")
    return associated_primes(power(I, n), method=method)


def maximal_prime(ring: PolyRing) -> MonomialPrime:
    return MonomialPrime(ring, range(ring.nvars))


def _embed_prime(P: MonomialPrime, ring: PolyRing) -> MonomialPrime:
    return MonomialPrime(ring, [ring.index(P.ring.vars[j]) for j in P.support])


def prime_sum(P: MonomialPrime, Q: MonomialPrime, ring: PolyRing) -> MonomialPrime:
    return MonomialPrime(ring, _embed_prime(P, ring).support | _embed_prime(Q, ring).support)


def verify_ass_sum(I: MonomialIdeal, J: MonomialIdeal):
    """Compare Ass and Min of ``R/(I+J)`` with pairwise sums of primes.

    In the monomial setting sums of monomial primes are prime, so both sets
    must be exactly ``{p + q}``.
    """
    from .report import VerificationReport

    if I.ring == J.ring or set(I.ring.vars) & set(J.ring.vars):
        raise RingMismatchError("I and J must live in rings with disjoint variables")
    R = join_rings(I.ring, J.ring)
    rep = VerificationReport("ass-sum", inputs=[I, J])
    total = ideal_sum(extend(I, I.ring, R), extend(J, J.ring, R))
    direct_ass = set(associated_primes(total))
    pred_ass = {prime_sum(p, q, R) for p, q in itertools.product(associated_primes(I), associated_primes(J))}
    rep.check("Ass(R/(I+J)) = {p+q}", direct_ass == pred_ass,
              computed=sorted(direct_ass), predicted=sorted(pred_ass))
    direct_min = set(minimal_primes(total))
    pred_min = {prime_sum(p, q, R) for p, q in itertools.product(minimal_primes(I), minimal_primes(J))}
    rep.check("Min(R/(I+J)) = {p+q}", direct_min == pred_min,
              computed=sorted(direct_min), predicted=sorted(pred_min))
    return rep
