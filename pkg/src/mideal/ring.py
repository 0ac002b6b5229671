"""Polynomial-ring contexts, monomials and monomial ideal arithmetic.

A monomial is a tuple of non-negative integers (its exponent vector) in the
variable order of a :class:`PolyRing`.  A :class:`MonomialIdeal` stores its
unique minimal generating set, sorted by total degree and then in descending
lexicographic order, so two equal ideals are equal as Python values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

Monomial = tuple[int, ...]

# int64 vectorisation is used below this bound, object arrays above it.
_INT64_SAFE = 1 << 60
# dense membership grids up to this many cells are used to minimalise
_GRID_MINIMALIZE_CELLS = 1 << 24


class RingMismatchError(ValueError):
    """Two operands live in different polynomial rings."""


@dataclass(frozen=True)
class PolyRing:
    vars: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.vars)
        object.__setattr__(self, "vars", names)
        if not names:
            raise ValueError("a polynomial ring needs at least one variable")
        for v in names:
            if not isinstance(v, str) or not v:
                raise ValueError(f"invalid variable name {v!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise KeyError(f"unknown variable {var!r} in ring {self.vars}") from None

    def one(self) -> Monomial:
        return (0,) * self.nvars

    def variable(self, var: str | int) -> Monomial:
        j = var if isinstance(var, int) else self.index(var)
        e = [0] * self.nvars
        e[j] = 1
        return tuple(e)

    def __str__(self):
        return "k[" + ",".join(self.vars) + "]"


def _sort_key(m: Monomial):
    return (sum(m), tuple(-e for e in m))


def _as_array(vectors: Sequence[Monomial]) -> np.ndarray:
    arr = np.asarray(vectors, dtype=object)
    if arr.size and max(max(v) for v in vectors) >= _INT64_SAFE:
        return arr
    return arr.astype(np.int64)


def minimalize(vectors: Iterable[Monomial]) -> list[Monomial]:
    """Return the divisibility antichain of ``vectors`` in canonical order."""
    if isinstance(vectors, np.ndarray) and vectors.dtype != object:
        return [tuple(v) for v in _minimal_rows(vectors).tolist()]
    uniq = {tuple(int(e) for e in v) for v in vectors}
    if len(uniq) <= 1:
        return sorted(uniq)
    vs = sorted(uniq, key=_sort_key)
    if len(vs) < 48:
        kept: list[Monomial] = []
        for v in vs:
            if not any(all(a <= b for a, b in zip(k, v)) for k in kept):
                kept.append(v)
        return kept
    arr = _as_array(vs)
    if arr.dtype == object:
        return [vs[i] for i in np.flatnonzero(_antichain_mask(arr))]
    return [tuple(v) for v in _minimal_rows(arr).tolist()]


def _minimal_rows(arr: np.ndarray) -> np.ndarray:
    """Integer rows: dedupe, keep the minimal ones, sort canonically."""
    if len(arr) == 0:
        return arr.reshape(0, arr.shape[1] if arr.ndim == 2 else 0)
    arr = np.unique(arr, axis=0)
    box = arr.max(axis=0) + 1
    small_box = arr.shape[1] > 0 and float(np.prod(box, dtype=np.float64)) <= _GRID_MINIMALIZE_CELLS
    if len(arr) >= 48 and small_box:
        arr = arr[_grid_minimal_mask(arr, box)]
    deg = arr.sum(axis=1)
    order = np.lexsort([-arr[:, j] for j in range(arr.shape[1] - 1, -1, -1)] + [deg])
    arr = arr[order]
    if len(arr) >= 48 and small_box:
        return arr
    return arr[_antichain_mask(arr)]


def _grid_minimal_mask(arr: np.ndarray, box) -> np.ndarray:
    """Rows c with no c - e_j in the ideal, membership read off a dense grid."""
    grid = np.zeros(tuple(int(b) for b in box), dtype=bool)
    grid[tuple(arr.T)] = True
    for ax in range(grid.ndim):
        np.logical_or.accumulate(grid, axis=ax, out=grid)
    keep = np.ones(len(arr), dtype=bool)
    for j in range(arr.shape[1]):
        has = arr[:, j] > 0
        lower = arr[has].copy()
        lower[:, j] -= 1
        keep[np.flatnonzero(has)[grid[tuple(lower.T)]]] = False
    return keep


def _antichain_mask(arr) -> np.ndarray:
    """For canonically sorted distinct rows, mark those with no divisor among the others."""
    deg = arr.sum(axis=1)
    keep = np.ones(len(arr), dtype=bool)
    # A proper divisor of v has strictly smaller degree, so each degree
    # layer is tested only against the kept part of the lower layers.
    bounds = np.flatnonzero(np.diff(deg)) + 1
    starts = np.concatenate([[0], bounds]).astype(int)
    ends = np.concatenate([bounds, [len(arr)]]).astype(int)
    for lo, hi in zip(starts, ends):
        if lo == 0:
            continue
        prev = arr[:lo][keep[:lo]]
        layer = arr[lo:hi]
        for s in range(0, len(layer), 256):
            blk = layer[s:s + 256]
            dom = np.zeros(len(blk), dtype=bool)
            for t in range(0, len(prev), 2048):
                p = prev[t:t + 2048]
                dom |= (p[None, :, :] <= blk[:, None, :]).all(axis=2).any(axis=1)
            keep[lo + s:lo + s + len(blk)] = ~dom
    return keep


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    The zero ideal has no generators; the unit ideal has the single
    generator ``(0, ..., 0)``.
    """

    ring: PolyRing
    gens: tuple[Monomial, ...]

    def __init__(self, ring: PolyRing, gens: Iterable[Sequence[int]] = ()):
        gens = [tuple(int(e) for e in g) for g in gens]
        for g in gens:
            if len(g) != ring.nvars:
                raise ValueError(
                    f"monomial {g} has {len(g)} exponents, ring {ring} has {ring.nvars} variables")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in {g}")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "gens", tuple(minimalize(gens)))

    @classmethod
    def _trusted(cls, ring: PolyRing, gens: Sequence[Monomial]) -> "MonomialIdeal":
        obj = object.__new__(cls)
        object.__setattr__(obj, "ring", ring)
        object.__setattr__(obj, "gens", tuple(gens))
        return obj

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (self.ring.one(),)

    @property
    def is_proper(self) -> bool:
        return not self.is_zero and not self.is_unit

    @property
    def ngens(self) -> int:
        return len(self.gens)

    def array(self) -> np.ndarray:
        if not self.gens:
            return np.zeros((0, self.ring.nvars), dtype=np.int64)
        return _as_array(self.gens)

    def max_exponents(self) -> Monomial:
        if not self.gens:
            return self.ring.one()
        return tuple(max(col) for col in zip(*self.gens))

    def __contains__(self, m) -> bool:
        return contains(self, m)

    def __str__(self):
        return to_m2(self)


def normalize(gens: Iterable[Sequence[int]], ring: PolyRing) -> MonomialIdeal:
    return MonomialIdeal(ring, gens)


def unit_ideal(ring: PolyRing) -> MonomialIdeal:
    return MonomialIdeal._trusted(ring, (ring.one(),))


def zero_ideal(ring: PolyRing) -> MonomialIdeal:
    return MonomialIdeal._trusted(ring, ())


def maximal_ideal(ring: PolyRing) -> MonomialIdeal:
    return MonomialIdeal(ring, [ring.variable(j) for j in range(ring.nvars)])


def variables_ideal(ring: PolyRing, support: Iterable[int]) -> MonomialIdeal:
    return MonomialIdeal(ring, [ring.variable(j) for j in support])


def _check_same(I: MonomialIdeal, J: MonomialIdeal):
    if I.ring != J.ring:
        raise RingMismatchError(f"ideals live in different rings: {I.ring} vs {J.ring}")


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I, J)
    return MonomialIdeal(I.ring, I.gens + J.gens)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I, J)
    if I.is_zero or J.is_zero:
        return zero_ideal(I.ring)
    A, B = I.array(), J.array()
    sums = (A[:, None, :] + B[None, :, :]).reshape(-1, I.ring.nvars)
    if sums.dtype == object:
        return MonomialIdeal._trusted(I.ring, minimalize(map(tuple, sums.tolist())))
    return MonomialIdeal._trusted(I.ring, minimalize(sums))


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise ValueError("power exponent must be non-negative")
    if n == 0:
        return unit_ideal(I.ring)
    return _power(I, n)


@lru_cache(maxsize=512)
def _power(I: "MonomialIdeal", n: int) -> "MonomialIdeal":
    # I^n from I^(n-1) so that a profile n = 1..N costs N products in total
    return I if n == 1 else product(_power(I, n - 1), I)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I, J)
    if I.is_zero or J.is_zero:
        return zero_ideal(I.ring)
    A, B = I.array(), J.array()
    lcms = np.maximum(A[:, None, :], B[None, :, :]).reshape(-1, I.ring.nvars)
    return MonomialIdeal._trusted(I.ring, minimalize(map(tuple, lcms.tolist())))


def intersect_all(ideals: Sequence[MonomialIdeal], ring: PolyRing | None = None) -> MonomialIdeal:
    if not ideals:
        if ring is None:
            raise ValueError("empty intersection needs a ring")
        return unit_ideal(ring)
    # Small ideals first keeps the intermediate lcm sets small.
    ordered = sorted(ideals, key=lambda K: K.ngens)
    acc = ordered[0]
    for K in ordered[1:]:
        acc = intersect(acc, K)
    return acc


def colon_monomial(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """``I : x^m``, computed generator-wise."""
    if len(m) != I.ring.nvars:
        raise ValueError("dimension mismatch between monomial and ring")
    if I.is_zero:
        return I
    shifted = np.maximum(I.array() - np.asarray(m, dtype=np.int64), 0)
    return MonomialIdeal._trusted(I.ring, minimalize(map(tuple, shifted.tolist())))


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I, J)
    if J.is_zero:
        return unit_ideal(I.ring)
    return intersect_all([colon_monomial(I, m) for m in J.gens])


def saturate(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I, J)
    if J.is_zero:
        raise ValueError("cannot saturate with respect to the zero ideal")
    current = I
    while True:
        nxt = colon(current, J)
        if nxt == current:
            return current
        current = nxt


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.ring, [tuple(min(e, 1) for e in g) for g in I.gens])


def divides(m: Monomial, n: Monomial) -> bool:
    return all(a <= b for a, b in zip(m, n))


def contains(I: MonomialIdeal, m: Sequence[int]) -> bool:
    m = tuple(m)
    if len(m) != I.ring.nvars:
        raise ValueError("dimension mismatch between monomial and ring")
    return any(divides(g, m) for g in I.gens)


def contains_many(I: MonomialIdeal, monos: np.ndarray) -> np.ndarray:
    """Vectorised membership test for the rows of ``monos``."""
    monos = np.asarray(monos)
    if I.is_zero or len(monos) == 0:
        return np.zeros(len(monos), dtype=bool)
    G = I.array()
    out = np.zeros(len(monos), dtype=bool)
    for s in range(0, len(G), 2048):
        g = G[s:s + 2048]
        out |= (g[None, :, :] <= monos[:, None, :]).all(axis=2).any(axis=1)
    return out


def is_subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True when ``I`` is contained in ``J``."""
    _check_same(I, J)
    if I.is_zero:
        return True
    return bool(contains_many(J, I.array()).all())


def ideal_eq(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _check_same(I, J)
    return I.gens == J.gens


def first_non_member(I: MonomialIdeal, J: MonomialIdeal) -> Monomial | None:
    """A minimal generator of ``I`` outside ``J``, or None if I is inside J."""
    _check_same(I, J)
    if I.is_zero:
        return None
    inside = contains_many(J, I.array())
    for g, ok in zip(I.gens, inside):
        if not ok:
            return g
    return None


def join_rings(A: PolyRing, B: PolyRing) -> PolyRing:
    clash = set(A.vars) & set(B.vars)
    if clash:
        raise ValueError(f"variable name collision: {sorted(clash)}")
    return PolyRing(A.vars + B.vars)


def extend(I: MonomialIdeal, from_ring: PolyRing, to_ring: PolyRing) -> MonomialIdeal:
    if I.ring != from_ring:
        raise RingMismatchError("ideal does not live in the source ring")
    pos = [to_ring.index(v) for v in from_ring.vars]
    gens = []
    for g in I.gens:
        e = [0] * to_ring.nvars
        for p, a in zip(pos, g):
            e[p] = a
        gens.append(tuple(e))
    return MonomialIdeal._trusted(to_ring, sorted(gens, key=_sort_key))


def substitute_one(I: MonomialIdeal, var: str) -> MonomialIdeal:
    """Set ``var`` to 1 and return the ideal in the ring without ``var``."""
    j = I.ring.index(var)
    if I.ring.nvars == 1:
        raise ValueError("cannot remove the only variable of a ring")
    ring = PolyRing(I.ring.vars[:j] + I.ring.vars[j + 1:])
    return MonomialIdeal(ring, [g[:j] + g[j + 1:] for g in I.gens])


def rename(I: MonomialIdeal, mapping: Mapping[str, str]) -> MonomialIdeal:
    for v in mapping:
        I.ring.index(v)
    names = tuple(mapping.get(v, v) for v in I.ring.vars)
    if len(set(names)) != len(names):
        raise ValueError("rename must be injective; use depthsynth gluing to identify variables")
    return MonomialIdeal._trusted(PolyRing(names), I.gens)


def localize(I: MonomialIdeal, keep: Iterable[int]) -> MonomialIdeal:
    """Set every variable outside ``keep`` to 1, staying in the same ring."""
    keep = set(keep)
    mask = [1 if j in keep else 0 for j in range(I.ring.nvars)]
    return MonomialIdeal(I.ring, [tuple(e * k for e, k in zip(g, mask)) for g in I.gens])


def initial_degree(I: MonomialIdeal) -> int:
    if I.is_zero:
        raise ValueError("the zero ideal has no initial degree")
    return min(sum(g) for g in I.gens)


# -- serialisation ---------------------------------------------------------


class IdealFormatError(ValueError):
    """Malformed ideal JSON; the message carries the offending position."""


def to_json(I: MonomialIdeal) -> str:
    names = ",".join(json.dumps(v) for v in I.ring.vars)
    gens = ",".join("[" + ",".join(str(e) for e in g) + "]" for g in I.gens)
    return '{"ring": {"vars": [' + names + ']}, "gens": [' + gens + "]}"


def ideal_to_obj(I: MonomialIdeal) -> dict:
    return {"ring": {"vars": list(I.ring.vars)}, "gens": [list(g) for g in I.gens]}


def ideal_from_obj(obj) -> MonomialIdeal:
    if not isinstance(obj, dict):
        raise IdealFormatError("top level: expected an object with keys 'ring' and 'gens'")
    ring = obj.get("ring")
    if not isinstance(ring, dict) or not isinstance(ring.get("vars"), list):
        raise IdealFormatError("ring.vars: expected a list of variable names")
    try:
        R = PolyRing(tuple(ring["vars"]))
    except ValueError as exc:
        raise IdealFormatError(f"ring.vars: {exc}") from None
    gens = obj.get("gens")
    if not isinstance(gens, list):
        raise IdealFormatError("gens: expected a list of exponent vectors")
    for i, g in enumerate(gens):
        if not isinstance(g, list) or len(g) != R.nvars:
            raise IdealFormatError(f"gens[{i}]: expected {R.nvars} exponents")
        for k, e in enumerate(g):
            if isinstance(e, bool) or not isinstance(e, int) or e < 0:
                raise IdealFormatError(f"gens[{i}][{k}]: expected a non-negative integer, got {e!r}")
    return MonomialIdeal(R, gens)


def from_json(text: str) -> MonomialIdeal:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise IdealFormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return ideal_from_obj(obj)


def monomial_str(ring: PolyRing, m: Monomial) -> str:
    parts = []
    for v, e in zip(ring.vars, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts) if parts else "1"


def to_m2(I: MonomialIdeal) -> str:
    """Macaulay2-style plain text, e.g. ``ideal(x^4, x^3*y)``."""
    if I.is_zero:
        return "ideal(0)"
    return "ideal(" + ", ".join(monomial_str(I.ring, g) for g in I.gens) + ")"


def parse_monomial(ring: PolyRing, text: str) -> Monomial:
    """Parse ``x^2*y`` style text."""
    e = [0] * ring.nvars
    text = text.strip()
    if text == "1":
        return tuple(e)
    for factor in text.split("*"):
        name, _, exp = factor.strip().partition("^")
        e[ring.index(name)] += int(exp) if exp else 1
    return tuple(e)


def ideal(ring: PolyRing | Sequence[str] | str, *monomials: str) -> MonomialIdeal:
    """Convenience constructor: ``ideal("x,y", "x^2", "x*y")``."""
    if isinstance(ring, str):
        ring = PolyRing(tuple(v.strip() for v in ring.split(",")))
    elif not isinstance(ring, PolyRing):
        ring = PolyRing(tuple(ring))
    return MonomialIdeal(ring, [parse_monomial(ring, m) for m in monomials])
