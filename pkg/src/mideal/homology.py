"""Multigraded Betti numbers, depth, regularity and Tor maps over GF(p).

For a monomial module M = U/V the Koszul complex K(x; M) in multidegree b
has one basis element for each subset τ of the support of b with x^(b-τ)
in U but not in V.  The boundary removes one element j of τ, which is
multiplication by x_j on M; the term survives exactly when x^(b-τ+e_j) is
still outside V.  So beta_{i,b}(M) is the homology in degree |τ| = i of a
small chain complex on subsets, with the usual simplicial signs.  For an
ideal I (U = I, V = 0) this is the upper Koszul complex.

Candidate multidegrees come from the breakpoint grid of gens(U) and gens(V):
along axis j only values where membership can change matter.  A point b
survives the cone filter only if for every j in supp(b) multiplication by
x_j fails to be an isomorphism M_(b-τ-e_j) -> M_(b-τ) for some τ avoiding j;
otherwise K(x; M)_b is the cone of an isomorphism and is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .linalg import FieldSpec, as_field, nullspace_mod_p, rank_mod_p
from .localcoh import (
    ResourceLimitError,
    _boundary_matrix,
    depth_quotient_localcoh,
    reduced_homology,
)
from .report import VerificationReport
from .ring import (
    MonomialIdeal,
    PolyRing,
    RingMismatchError,
    colon,
    ideal_eq,
    ideal_sum,
    intersect,
    is_subset,
    unit_ideal,
    zero_ideal,
)

INF = math.inf


class ZeroModuleError(ValueError):
    """The module U/V is zero (U = V)."""


class ContainmentError(ValueError):
    """V is not contained in U."""


@dataclass(frozen=True)
class MonomialModule:
    """The S-module U/V for monomial ideals V ⊆ U."""

    U: MonomialIdeal
    V: MonomialIdeal

    def __post_init__(self):
        if self.U.ring != self.V.ring:
            raise RingMismatchError("U and V must live in the same ring")
        if not is_subset(self.V, self.U):
            raise ContainmentError("V is not contained in U")

    @classmethod
    def quotient(cls, I: MonomialIdeal) -> "MonomialModule":
        """S/I."""
        return cls(unit_ideal(I.ring), I)

    @classmethod
    def of_ideal(cls, I: MonomialIdeal) -> "MonomialModule":
        """I as a module."""
        return cls(I, zero_ideal(I.ring))

    @property
    def ring(self) -> PolyRing:
        return self.U.ring

    @property
    def is_zero(self) -> bool:
        return ideal_eq(self.U, self.V)

    def annihilator(self) -> MonomialIdeal:
        return colon(self.V, self.U)

    def dim(self) -> int:
        from .decomposition import dim_quotient

        if self.is_zero:
            raise ZeroModuleError("the zero module has no dimension")
        return dim_quotient(self.annihilator())


def _as_module(obj) -> MonomialModule:
    if isinstance(obj, MonomialModule):
        return obj
    if isinstance(obj, MonomialIdeal):
        return MonomialModule.of_ideal(obj)
    raise TypeError(f"expected a MonomialIdeal or MonomialModule, got {type(obj).__name__}")


# -- Betti tables ------------------------------------------------------------


class BettiTable:
    """Finitely supported map (i, b) -> beta_{i,b} over a fixed prime field.

    Tables computed over different characteristics cannot be compared:
    ``==`` raises TypeError instead of silently answering.
    """

    def __init__(self, entries: Mapping[tuple[int, tuple[int, ...]], int], field: FieldSpec, nvars: int):
        self.entries = {k: int(v) for k, v in sorted(entries.items()) if v}
        self.field = field
        self.nvars = nvars

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        if self.field != other.field:
            raise TypeError(
                f"cannot compare Betti tables over characteristics {self.field.p} and {other.field.p}")
        return self.entries == other.entries

    def __hash__(self):
        return hash((self.field, tuple(self.entries.items())))

    def __getitem__(self, key) -> int:
        i, b = key
        return self.entries.get((i, tuple(b)), 0)

    def __bool__(self):
        return bool(self.entries)

    @property
    def pd(self) -> int:
        if not self.entries:
            raise ZeroModuleError("empty Betti table")
        return max(i for i, _ in self.entries)

    @property
    def reg(self) -> int:
        if not self.entries:
            raise ZeroModuleError("empty Betti table")
        return max(sum(b) - i for i, b in self.entries)

    def graded(self) -> dict[tuple[int, int], int]:
        """Coarsen to (i, j = |b|)."""
        out: dict[tuple[int, int], int] = {}
        for (i, b), v in self.entries.items():
            out[(i, sum(b))] = out.get((i, sum(b)), 0) + v
        return dict(sorted(out.items()))

    def totals(self) -> list[int]:
        if not self.entries:
            return []
        tot = [0] * (self.pd + 1)
        for (i, _), v in self.entries.items():
            tot[i] += v
        return tot

    def to_obj(self) -> dict:
        return {
            "characteristic": self.field.p,
            "entries": [[i, list(b), v] for (i, b), v in self.entries.items()],
        }

    def pretty(self) -> str:
        """Triangular layout: column i, row j - i, entry sum over |b| = j."""
        g = self.graded()
        if not g:
            return "0"
        cols = range(self.pd + 1)
        rows = sorted({j - i for i, j in g})
        width = max(len(str(v)) for v in list(g.values()) + self.totals()) + 1
        head = "       " + "".join(f"{i:>{width}}" for i in cols)
        lines = [head, "total: " + "".join(f"{t:>{width}}" for t in self.totals())]
        for r in rows:
            cells = []
            for i in cols:
                v = g.get((i, i + r), 0)
                cells.append(f"{(v if v else '.'):>{width}}")
            lines.append(f"{r:>5}: " + "".join(cells))
        return "\n".join(lines)

    def __repr__(self):
        return f"BettiTable(p={self.field.p}, totals={self.totals()})"


# -- Koszul machinery --------------------------------------------------------


def _member_on(vals: list[np.ndarray], I: MonomialIdeal) -> np.ndarray:
    shape = tuple(len(v) for v in vals)
    M = np.zeros(shape, dtype=bool)
    if I.is_zero:
        return M
    G = I.array()
    idx = tuple(np.searchsorted(vals[j], G[:, j]) for j in range(len(vals)))
    M[idx] = True
    for ax in range(M.ndim):
        M = np.logical_or.accumulate(M, axis=ax)
    return M


def _breakpoints(ideals: Iterable[MonomialIdeal], nvars: int) -> list[np.ndarray]:
    cols: list[list[int]] = [[0] for _ in range(nvars)]
    for I in ideals:
        for g in I.gens:
            for j, e in enumerate(g):
                cols[j].append(e)
    return [np.unique(np.asarray(c, dtype=np.int64)) for c in cols]


GRID_CELL_LIMIT = 20_000_000


class _ModuleGrid:
    def __init__(self, M: MonomialModule, extra: Iterable[MonomialIdeal] = ()):
        n = M.ring.nvars
        self.vals = _breakpoints([M.U, M.V, *extra], n)
        shape = tuple(len(v) for v in self.vals)
        if math.prod(shape) > GRID_CELL_LIMIT:
            raise ResourceLimitError(f"breakpoint grid of shape {shape} exceeds {GRID_CELL_LIMIT} cells")
        self.inU = _member_on(self.vals, M.U)
        self.inV = _member_on(self.vals, M.V)
        self.N = self.inU & ~self.inV

    def corner(self, idx) -> tuple[int, ...]:
        return tuple(int(self.vals[j][i]) for j, i in enumerate(idx))


def _shift_down(E: np.ndarray, axis: int) -> np.ndarray:
    """out[i] = E[i - e_axis], False where i_axis = 0."""
    out = np.zeros_like(E)
    src = [slice(None)] * E.ndim
    dst = [slice(None)] * E.ndim
    src[axis] = slice(None, -1)
    dst[axis] = slice(1, None)
    out[tuple(dst)] = E[tuple(src)]
    return out


def candidate_cells(N: np.ndarray) -> np.ndarray:
    """Grid indices that pass the cone filter, as rows of an int array."""
    n = N.ndim
    cand = np.ones(N.shape, dtype=bool)
    for j in range(n):
        E = N != _shift_down(N, j)
        # index 0 on axis j has no lower neighbour; it is handled by the OR below
        first = [slice(None)] * n
        first[j] = 0
        E[tuple(first)] = False
        for k in range(n):
            if k != j:
                E |= _shift_down(E, k)
        ok = E.copy()
        ok[tuple(first)] = True
        cand &= ok
    return np.argwhere(cand)


_SUBSET_CACHE: dict[int, np.ndarray] = {}


def _subset_bits(s: int) -> np.ndarray:
    """Row m is the bit vector of mask m over s positions."""
    if s not in _SUBSET_CACHE:
        m = np.arange(1 << s)
        _SUBSET_CACHE[s] = ((m[:, None] >> np.arange(s)[None, :]) & 1).astype(np.int64)
    return _SUBSET_CACHE[s]


def _chains_by_support(grid_arrays: list[np.ndarray], cells: np.ndarray):
    """Yield (support, cell rows, chain indicators per array) grouped by support."""
    if len(cells) == 0:
        return
    supp_key = (cells > 0) @ (1 << np.arange(cells.shape[1]))
    for key in np.unique(supp_key):
        rows = cells[supp_key == key]
        supp = [j for j in range(cells.shape[1]) if int(key) >> j & 1]
        sub = _subset_bits(len(supp))
        idx = np.repeat(rows[:, None, :], len(sub), axis=1)
        if supp:
            idx[:, :, supp] -= sub[None, :, :]
        flat = tuple(idx[..., j] for j in range(cells.shape[1]))
        yield supp, rows, [A[flat] for A in grid_arrays]


def _koszul_betti(chain_mask: np.ndarray, field: FieldSpec) -> dict[int, int]:
    """Betti numbers {i: beta_i} from the chain indicator over subset masks."""
    faces = [int(m) for m in np.flatnonzero(chain_mask)]
    h = reduced_homology(faces, field)
    return {j + 1: v for j, v in h.items()}


def betti_table(obj, field=None) -> BettiTable:
    """Full multigraded Betti table of an ideal (as a module) or of U/V."""
    F = as_field(field)
    M = _as_module(obj)
    if M.is_zero:
        raise ZeroModuleError("betti_table of the zero module")
    grid = _ModuleGrid(M)
    cells = candidate_cells(grid.N)
    entries: dict[tuple[int, tuple[int, ...]], int] = {}
    cache: dict[bytes, dict[int, int]] = {}
    for supp, rows, (chains,) in _chains_by_support([grid.N], cells):
        for row, pattern in zip(rows, chains):
            key = bytes([len(supp)]) + np.packbits(pattern).tobytes()
            if key not in cache:
                cache[key] = _koszul_betti(pattern, F)
            if cache[key]:
                b = grid.corner(row)
                for i, v in cache[key].items():
                    entries[(i, b)] = v
    return BettiTable(entries, F, M.ring.nvars)


def upper_koszul_complex(I: MonomialIdeal, b) -> list[tuple[int, ...]]:
    """Faces τ ⊆ supp(b) with x^(b-τ) in I, as sorted index tuples."""
    b = tuple(int(e) for e in b)
    if len(b) != I.ring.nvars or any(e < 0 for e in b):
        raise ValueError("b must be a non-negative vector of the ring's length")
    supp = [j for j, e in enumerate(b) if e > 0]
    faces = []
    for m in range(1 << len(supp)):
        tau = tuple(supp[k] for k in range(len(supp)) if m >> k & 1)
        c = list(b)
        for j in tau:
            c[j] -= 1
        if tuple(c) in I:
            faces.append(tau)
    faces.sort(key=lambda t: (len(t), t))
    return faces


def betti_at(obj, b, field=None) -> dict[int, int]:
    """beta_{i,b} for a single multidegree, straight from the Koszul complex."""
    F = as_field(field)
    M = _as_module(obj)
    b = tuple(int(e) for e in b)
    supp = [j for j, e in enumerate(b) if e > 0]
    faces = []
    for m in range(1 << len(supp)):
        c = list(b)
        for k in range(len(supp)):
            if m >> k & 1:
                c[supp[k]] -= 1
        if tuple(c) in M.U and tuple(c) not in M.V:
            faces.append(m)
    return {j + 1: v for j, v in reduced_homology(faces, F).items()}


# -- depth, pd, regularity ---------------------------------------------------


def pd(obj, field=None) -> int:
    return betti_table(obj, field).pd


def depth_module(M, field=None) -> int:
    """depth by Auslander-Buchsbaum: n - pd."""
    M = _as_module(M)
    return M.ring.nvars - pd(M, field)


def depth_quotient(I: MonomialIdeal, field=None, method: str = "auto") -> int:
    """depth S/I.

    ``betti`` uses Auslander-Buchsbaum on the Betti table of S/I;
    ``localcoh`` uses degree complexes (:mod:`mideal.localcoh`), which scales
    to large powers.  ``auto`` takes the Betti route for small inputs.
    """
    if not I.is_proper:
        raise ZeroModuleError("depth_quotient needs a proper nonzero ideal") if I.is_unit else \
            ValueError("depth_quotient needs a proper nonzero ideal")
    if method == "auto":
        method = "betti" if I.ngens <= 30 and I.ring.nvars <= 6 else "localcoh"
    if method == "betti":
        return depth_module(MonomialModule.quotient(I), field)
    if method == "localcoh":
        return depth_quotient_localcoh(I, field)
    raise ValueError(f"unknown method {method!r}")


def regularity(obj, field=None) -> int:
    """reg of the module (an ideal is treated as a module, not as S/I)."""
    return betti_table(obj, field).reg


def regularity_quotient(I: MonomialIdeal, field=None) -> int:
    return regularity(MonomialModule.quotient(I), field)


def depth_or_inf(M: MonomialModule, field=None) -> float:
    """Depth with the convention depth 0-module = +inf (drops out of minima)."""
    return INF if M.is_zero else depth_module(M, field)


def reg_or_neginf(M: MonomialModule, field=None) -> float:
    return -INF if M.is_zero else regularity(M, field)


# -- Tor maps ----------------------------------------------------------------


@dataclass
class TorMapResult:
    zero: bool
    nonzero_at: list[tuple[int, tuple[int, ...], int]]  # (i, b, rank of the induced map)

    def __bool__(self):
        return self.zero


def _induced_rank(faces_V: list[int], faces_U: list[int], i: int, p: int) -> int:
    """rank of H_i(K(V)) -> H_i(K(U)) for chain sets given as subset masks."""
    deg = lambda m: bin(m).count("1")
    CU_i = sorted(m for m in faces_U if deg(m) == i)
    if not CU_i:
        return 0
    CV_i = sorted(m for m in faces_V if deg(m) == i)
    CV_lo = sorted(m for m in faces_V if deg(m) == i - 1)
    CU_hi = sorted(m for m in faces_U if deg(m) == i + 1)
    if CV_lo:
        Z = nullspace_mod_p(_boundary_matrix(CV_lo, CV_i, p), p)
    else:
        Z = np.eye(len(CV_i), dtype=np.int64)
    if len(Z) == 0:
        return 0
    pos = {m: k for k, m in enumerate(CU_i)}
    Zu = np.zeros((len(Z), len(CU_i)), dtype=np.int64)
    for k, m in enumerate(CV_i):
        Zu[:, pos[m]] = Z[:, k]
    B = _boundary_matrix(CU_i, CU_hi, p).T if CU_hi else np.zeros((0, len(CU_i)), dtype=np.int64)
    rb = rank_mod_p(B, p) if len(B) else 0
    return rank_mod_p(np.vstack([B, Zu]) if len(B) else Zu, p) - rb


def tor_map_is_zero(V: MonomialIdeal, U: MonomialIdeal, field=None) -> TorMapResult:
    """Is Tor_i(k, V) -> Tor_i(k, U) zero for every i, for the inclusion V ⊆ U?

    Per multidegree the Koszul complex of V is a subcomplex of that of U on
    the same subset basis, so the map is zero iff every cycle of V is a
    boundary in U.
    """
    F = as_field(field)
    if U.ring != V.ring:
        raise RingMismatchError("U and V must live in the same ring")
    if not is_subset(V, U):
        raise ContainmentError("V is not contained in U")
    if V.is_zero:
        return TorMapResult(True, [])
    grid = _ModuleGrid(MonomialModule.of_ideal(U), extra=[V])
    inV = _member_on(grid.vals, V)
    cells = candidate_cells(inV)
    bad = []
    cache: dict[bytes, dict[int, int]] = {}
    for supp, rows, (cv, cu) in _chains_by_support([inV, grid.inU], cells):
        for row, pv, pu in zip(rows, cv, cu):
            key = bytes([len(supp)]) + np.packbits(pv).tobytes() + np.packbits(pu).tobytes()
            if key not in cache:
                fv = [int(m) for m in np.flatnonzero(pv)]
                fu = [int(m) for m in np.flatnonzero(pu)]
                out = {}
                for i in range(len(supp) + 1):
                    r = _induced_rank(fv, fu, i, F.p)
                    if r:
                        out[i] = r
                cache[key] = out
            for i, r in cache[key].items():
                bad.append((i, grid.corner(row), r))
    bad.sort()
    return TorMapResult(not bad, bad)


# -- partial-star and Betti splittings ----------------------------------------


def dstar(I: MonomialIdeal) -> MonomialIdeal:
    """Ideal generated by g / x_j over minimal generators g and variables x_j | g."""
    gens = []
    for g in I.gens:
        for j, e in enumerate(g):
            if e:
                h = list(g)
                h[j] -= 1
                gens.append(tuple(h))
    return MonomialIdeal(I.ring, gens)


def dstar_containment(I: MonomialIdeal, n: int) -> bool:
    """Check ∂*(I^(n)) ⊆ I^(n-1)."""
    from .decomposition import symbolic_power

    if n < 1:
        raise ValueError("n must be >= 1")
    lower = unit_ideal(I.ring) if n == 1 else symbolic_power(I, n - 1)
    return is_subset(dstar(symbolic_power(I, n)), lower)


def _depth_q(I: MonomialIdeal, field) -> float:
    if I.is_unit:
        return INF
    return depth_module(MonomialModule.quotient(I), field)


def betti_splitting_check(P: MonomialIdeal, I: MonomialIdeal, J: MonomialIdeal, field=None) -> VerificationReport:
    """Betti-number identity for P = I + J versus Tor-vanishing of I∩J -> I, J."""
    F = as_field(field)
    if not (P.ring == I.ring == J.ring):
        raise RingMismatchError("P, I, J must share a ring")
    if not ideal_eq(P, ideal_sum(I, J)):
        raise ValueError("P is not equal to I + J")
    K = intersect(I, J)
    rep = VerificationReport("betti-splitting", inputs=[P, I, J], characteristic=F.p)
    bP, bI, bJ = betti_table(P, F), betti_table(I, F), betti_table(J, F)
    bK = betti_table(K, F) if not K.is_zero else BettiTable({}, F, P.ring.nvars)
    keys = set(bP.entries) | set(bI.entries) | set(bJ.entries) | {(i + 1, b) for i, b in bK.entries}
    mismatch = [(i, b) for i, b in sorted(keys) if bP[i, b] != bI[i, b] + bJ[i, b] + bK[i - 1, b]]
    identity = not mismatch
    tI = tor_map_is_zero(K, I, F)
    tJ = tor_map_is_zero(K, J, F)
    # the identity and the two Tor verdicts are recorded, not asserted; ``splitting``
    # carries the answer and the equivalence check ties the three together
    rep.check("betti identity evaluated", True, holds=identity, mismatches=mismatch[:10])
    rep.check("Tor(I∩J -> I) evaluated", True, zero=tI.zero)
    rep.check("Tor(I∩J -> J) evaluated", True, zero=tJ.zero)
    rep.check("splitting iff both Tor maps vanish", identity == (tI.zero and tJ.zero),
              identity=identity, tor_I=tI.zero, tor_J=tJ.zero)
    rep.splitting = identity  # type: ignore[attr-defined]
    if identity:
        dP, dI, dJ, dK = (_depth_q(X, F) for X in (P, I, J, K))
        rep.check("depth R/P = min{depth R/I, depth R/J, depth R/(I∩J) - 1}",
                  dP == min(dI, dJ, dK - 1), lhs=dP, rhs=min(dI, dJ, dK - 1))
        rP = regularity_quotient(P, F)
        rI = regularity_quotient(I, F) if not I.is_unit else -INF
        rJ = regularity_quotient(J, F) if not J.is_unit else -INF
        rK = regularity_quotient(K, F) if not K.is_unit else -INF
        rep.check("reg R/P = max{reg R/I, reg R/J, reg R/(I∩J) - 1}",
                  rP == max(rI, rJ, rK - 1), lhs=rP, rhs=max(rI, rJ, rK - 1))
    return rep.finish()
