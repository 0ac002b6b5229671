"""Depth and associated primes of S/I through degree complexes.

For a monomial ``x^a`` outside ``I`` let ``D_a`` be the simplicial complex of
index sets F such that ``x^a`` stays outside I after every variable in F is
set to 1.  ``D_a`` is the Stanley-Reisner complex of ``sqrt(I : x^a)``, and

    depth S/I = min over x^a not in I of depth k[D_a],
    P in Ass(S/I)  iff  some D_a is the full simplex on the variables outside P.

``D_a`` only changes when a coordinate of ``a`` crosses a generator exponent,
so it is enough to visit one point per cell of the compressed grid whose
axis ``j`` has the breakpoints ``{0} U {g_j}``.  Membership on the grid is a
cumulative OR of the generator indicator, and setting x_j to 1 is a slice
at the last index of axis ``j``.  This needs no free resolution, so it
handles powers with thousands of generators that would be hopeless for an
lcm-lattice Betti computation.  Depth of each distinct ``k[D_a]`` then comes
from the reduced homology of links.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import as_field, rank_mod_p
from .ring import MonomialIdeal

GRID_CELL_LIMIT = 40_000_000


class ResourceLimitError(RuntimeError):
    """The requested computation exceeds a documented size budget."""


# -- simplicial complexes as sets of bitmask faces --------------------------


def _bits(mask: int) -> list[int]:
    out = []
    j = 0
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return out


def _boundary_matrix(rows: list[int], cols: list[int], p: int) -> np.ndarray:
    """Matrix of the simplicial boundary from ``cols`` (k-faces) to ``rows``."""
    pos = {f: i for i, f in enumerate(rows)}
    D = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for c, face in enumerate(cols):
        for k, v in enumerate(_bits(face)):
            r = pos.get(face & ~(1 << v))
            if r is not None:
                D[r, c] = 1 if k % 2 == 0 else p - 1
    return D


def reduced_homology(faces, field=None, max_dim: int | None = None) -> dict[int, int]:
    """Reduced Betti numbers ``{j: dim H~_j}`` for ``j >= -1`` (nonzero only).

    ``faces`` is an iterable of vertex bitmasks closed under subsets.  The
    complex ``{empty}`` has H~_-1 of rank 1; the void complex (no faces at
    all, not even the empty one) has no homology.
    """
    p = as_field(field).p
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(bin(f).count("1") - 1, []).append(f)
    if not by_dim:
        return {}
    for v in by_dim.values():
        v.sort()
    top = max(by_dim)
    if max_dim is not None:
        top = min(top, max_dim)
    ranks: dict[int, int] = {}

    def rank_d(k):  # rank of the boundary C_k -> C_{k-1}
        if k not in ranks:
            if k <= -1 or k not in by_dim or (k - 1) not in by_dim:
                ranks[k] = 0
            else:
                ranks[k] = rank_mod_p(_boundary_matrix(by_dim[k - 1], by_dim[k], p), p)
        return ranks[k]

    out = {}
    for j in range(-1, top + 1):
        h = len(by_dim.get(j, ())) - rank_d(j) - rank_d(j + 1)
        if h:
            out[j] = h
    return out


def link(faces: frozenset[int], F: int) -> list[int]:
    return [G for G in faces if not G & F and (G | F) in faces]


def sr_depth(faces: frozenset[int], field=None, bound: float = math.inf) -> float:
    """depth k[D] from local cohomology of links, returning ``bound`` if larger.

    H^i_m(k[D]) is nonzero iff H~_{i-|F|-1}(lk F) is nonzero for some face F,
    so depth = min |F| + 1 + j over faces F and nonzero H~_j(lk F).  Faces
    with |F| >= the current best cannot improve it, which keeps the search
    short when depths are small.
    """
    best = bound
    for F in sorted(faces, key=lambda f: (bin(f).count("1"), f)):
        size = bin(F).count("1")
        if size >= best:
            break
        limit = best - size - 1  # only j < limit can improve
        lk = link(faces, F)
        h = reduced_homology(lk, field, max_dim=None if limit == math.inf else int(limit) - 1)
        for j in sorted(h):
            if size + 1 + j < best:
                best = size + 1 + j
            break
    return best


def is_full_simplex(faces: frozenset[int]) -> int | None:
    """Vertex mask if ``faces`` is all subsets of one vertex set, else None."""
    if not faces:
        return None
    W = 0
    for f in faces:
        W |= f
    return W if len(faces) == 1 << bin(W).count("1") else None


# -- the compressed grid ----------------------------------------------------


@dataclass
class MembershipGrid:
    """``member[i]`` tells whether the cell with corner ``vals[j][i_j]`` lies in I."""

    vals: list[np.ndarray]
    member: np.ndarray

    @property
    def shape(self):
        return self.member.shape

    def corner(self, idx) -> tuple[int, ...]:
        return tuple(int(self.vals[j][i]) for j, i in enumerate(idx))


def membership_grid(I: MonomialIdeal, extra=None, limit: int = GRID_CELL_LIMIT) -> MembershipGrid:
    G = I.array()
    n = I.ring.nvars
    cols = [G[:, j] for j in range(n)]
    if extra is not None and len(extra):
        E = np.asarray(extra, dtype=np.int64)
        cols = [np.concatenate([cols[j], E[:, j]]) for j in range(n)]
    vals = [np.unique(np.concatenate([[0], c])).astype(np.int64) for c in cols]
    shape = tuple(len(v) for v in vals)
    if math.prod(shape) > limit:
        raise ResourceLimitError(f"breakpoint grid of shape {shape} exceeds {limit} cells")
    M = np.zeros(shape, dtype=bool)
    if len(G):
        M[tuple(np.searchsorted(vals[j], G[:, j]) for j in range(n))] = True
    for ax in range(n):
        M = np.logical_or.accumulate(M, axis=ax)
    return MembershipGrid(vals, M)


def degree_complexes(I: MonomialIdeal, grid: MembershipGrid | None = None) -> dict[frozenset[int], tuple[int, ...]]:
    """Distinct complexes ``D_a`` over ``x^a`` outside I, each with one witness ``a``."""
    if grid is None:
        grid = membership_grid(I)
    M = grid.member
    n = M.ndim
    nf = 1 << n
    words = (nf + 63) // 64
    rows = M.shape[0]
    per_row = max(1, M.size // rows)
    step = max(1, (1 << 23) // (per_row * words))
    found: dict[bytes, tuple[int, ...]] = {}
    for s in range(0, rows, step):
        e = min(rows, s + step)
        chunk_shape = (e - s,) + M.shape[1:]
        outside = ~M[s:e]
        if not outside.any():
            continue
        codes = np.zeros(chunk_shape + (words,), dtype=np.uint64)
        for F in range(nf):
            sl = tuple(slice(-1, None) if F >> j & 1 else (slice(s, e) if j == 0 else slice(None))
                       for j in range(n))
            bit = np.broadcast_to(~M[sl], chunk_shape)
            codes[..., F // 64] |= bit.astype(np.uint64) << np.uint64(F % 64)
        flat = codes.reshape(-1, words)
        cells = np.flatnonzero(outside.reshape(-1))
        uniq, first = np.unique(flat[cells], axis=0, return_index=True)
        for code, c in zip(uniq, first):
            key = code.tobytes()
            if key not in found:
                local = np.unravel_index(cells[c], chunk_shape)
                found[key] = (local[0] + s,) + tuple(int(x) for x in local[1:])
    out = {}
    for key, idx in found.items():
        code = np.frombuffer(key, dtype=np.uint64)
        faces = frozenset(F for F in range(nf) if int(code[F // 64]) >> (F % 64) & 1)
        out[faces] = grid.corner(idx)
    return out


def depth_quotient_localcoh(I: MonomialIdeal, field=None) -> int:
    """depth S/I as the minimum of depth k[D_a]; see the module docstring."""
    if not I.is_proper:
        raise ValueError("expected a proper nonzero monomial ideal")
    complexes = degree_complexes(I)
    best = math.inf
    # Small complexes first: they tend to have small depth and tighten the bound.
    for faces in sorted(complexes, key=lambda c: (len(c), sorted(c))):
        best = min(best, sr_depth(faces, field, bound=best))
        if best == 0:
            break
    return int(best)


def associated_primes_grid(I: MonomialIdeal):
    from .decomposition import MonomialPrime

    if not I.is_proper:
        raise ValueError("expected a proper nonzero monomial ideal")
    n = I.ring.nvars
    full = (1 << n) - 1
    primes = set()
    for faces in degree_complexes(I):
        W = is_full_simplex(faces)
        if W is not None:
            primes.add(MonomialPrime(I.ring, _bits(full & ~W)))
    return sorted(primes)


def maximal_ideal_is_associated(I: MonomialIdeal) -> bool:
    """Socle test: some x^a outside I has x^a * x_j in I for every j.

    Independent of the degree complexes: the top corner of a grid cell is
    pushed into the next cell along each axis.
    """
    if not I.is_proper:
        raise ValueError("expected a proper nonzero monomial ideal")
    grid = membership_grid(I)
    M = grid.member
    ok = ~M
    for j in range(M.ndim):
        nxt = np.zeros_like(M)
        src = [slice(None)] * M.ndim
        dst = [slice(None)] * M.ndim
        src[j] = slice(1, None)
        dst[j] = slice(None, -1)
        nxt[tuple(dst)] = M[tuple(src)]
        ok &= nxt
    return bool(ok.any())
