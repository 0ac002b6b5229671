"""Slow, independent reference computations used to cross-check the fast paths.

Nothing here shares code with the Koszul/grid machinery beyond ``linalg``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from .linalg import as_field, rank_mod_p
from .ring import MonomialIdeal


def _lcm(gs):
    return tuple(max(col) for col in zip(*gs))


def taylor_betti(I: MonomialIdeal, field=None, quotient: bool = False) -> dict:
    """Betti numbers from the Taylor resolution, reduced to its minimal part.

    The Taylor complex has a basis element for each nonempty subset σ of
    generators in degree lcm(σ).  Tensoring with k keeps only the boundary
    terms that preserve the lcm, so beta_{i,b}(I) is the homology in
    position i of the complex on subsets with |σ| = i + 1 and lcm(σ) = b.
    With ``quotient=True`` the result is shifted to S/I.
    """
    p = as_field(field).p
    gens = list(I.gens)
    by_lcm: dict[tuple, dict[int, list[tuple[int, ...]]]] = {}
    for r in range(1, len(gens) + 1):
        for sigma in itertools.combinations(range(len(gens)), r):
            b = _lcm([gens[k] for k in sigma])
            by_lcm.setdefault(b, {}).setdefault(r - 1, []).append(sigma)
    out = {}
    for b, chains in by_lcm.items():
        def dmat(i):
            src, dst = chains.get(i, []), chains.get(i - 1, [])
            if not src or not dst:
                return 0
            pos = {s: k for k, s in enumerate(dst)}
            D = np.zeros((len(dst), len(src)), dtype=np.int64)
            for c, s in enumerate(src):
                for k in range(len(s)):
                    t = s[:k] + s[k + 1:]
                    if t in pos:
                        D[pos[t], c] = 1 if k % 2 == 0 else p - 1
            return rank_mod_p(D, p)
        for i in chains:
            h = len(chains[i]) - dmat(i) - dmat(i + 1)
            if h:
                out[(i + 1 if quotient else i, b)] = h
    if quotient:
        out[(0, (0,) * I.ring.nvars)] = 1
    return dict(sorted(out.items()))


def brute_force_member_box(I: MonomialIdeal, box) -> set[tuple[int, ...]]:
    """All monomials in the box [0, box] that lie in I, by direct division."""
    out = set()
    for m in itertools.product(*(range(b + 1) for b in box)):
        if any(all(g[j] <= m[j] for j in range(len(m))) for g in I.gens):
            out.add(m)
    return out


def lp_by_vertex_enumeration(c, A, b):
    """min c.z subject to A z >= b, z >= 0, by enumerating basic solutions.

    Exponential, exact over Fractions; only for tiny problems.
    """
    n = len(c)
    rows = [list(map(Fraction, r)) for r in A] + [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    rhs = [Fraction(v) for v in b] + [Fraction(0)] * n
    best = None
    for basis in itertools.combinations(range(len(rows)), n):
        M = [rows[k][:] + [rhs[k]] for k in basis]
        z = _solve(M, n)
        if z is None:
            continue
        if all(sum(r[j] * z[j] for j in range(n)) >= v for r, v in zip(rows, rhs)):
            val = sum(ci * zi for ci, zi in zip(c, z))
            if best is None or val < best:
                best = val
    return best


def _solve(M, n):
    M = [r[:] for r in M]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [v * inv for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]
