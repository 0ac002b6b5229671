"""A small exact simplex solver over ``fractions.Fraction``.

Two-phase tableau method with Bland's rule, so it never cycles.  Problem
sizes in this package are tiny (a handful of rows), which makes dense
rational tableaux the simplest correct choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL, INFEASIBLE, UNBOUNDED = "optimal", "infeasible", "unbounded"


@dataclass
class LPResult:
    status: str
    value: Fraction | None = None
    x: list[Fraction] | None = None


def _pivot(T: list[list[Fraction]], r: int, c: int):
    inv = 1 / T[r][c]
    T[r] = [v * inv for v in T[r]]
    for i in range(len(T)):
        if i != r and T[i][c] != 0:
            f = T[i][c]
            Ti, Tr = T[i], T[r]
            T[i] = [a - f * b for a, b in zip(Ti, Tr)]


def _run(T, basis, ncols, allowed) -> str:
    """Minimise the objective in the last row of T; columns < ncols are variables."""
    m = len(T) - 1
    while True:
        obj = T[m]
        enter = next((j for j in range(ncols) if allowed[j] and obj[j] < 0), None)
        if enter is None:
            return OPTIMAL
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return UNBOUNDED
        _pivot(T, best[1], enter)
        basis[best[1]] = enter


def solve_lp(c: Sequence, constraints: Sequence[tuple[Sequence, str, object]], maximize: bool = False) -> LPResult:
    """Optimise ``c.x`` over ``x >= 0`` subject to rows ``(a, op, b)``, op in <=, >=, ==."""
    n = len(c)
    rows, rhs = [], []
    nslack = sum(1 for _, op, _ in constraints if op in ("<=", ">="))
    k = 0
    for a, op, b in constraints:
        if len(a) != n:
            raise ValueError("constraint length does not match the objective")
        row = [Fraction(v) for v in a] + [Fraction(0)] * nslack
        if op == "<=":
            row[n + k] = Fraction(1)
            k += 1
        elif op == ">=":
            row[n + k] = Fraction(-1)
            k += 1
        elif op != "==":
            raise ValueError(f"unknown constraint operator {op!r}")
        b = Fraction(b)
        if b < 0:
            row, b = [-v for v in row], -b
        rows.append(row)
        rhs.append(b)
    m = len(rows)
    nv = n + nslack
    # phase 1: one artificial per row
    T = [rows[i] + [Fraction(int(i == j)) for j in range(m)] + [rhs[i]] for i in range(m)]
    obj = [Fraction(0)] * (nv + m + 1)
    for i in range(m):
        obj = [o - v for o, v in zip(obj, T[i])]
    for j in range(nv, nv + m):
        obj[j] = Fraction(0)
    T.append(obj)
    basis = list(range(nv, nv + m))
    _run(T, basis, nv + m, [True] * (nv + m))
    if T[m][-1] != 0:
        return LPResult(INFEASIBLE)
    # drive remaining artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= nv:
            col = next((j for j in range(nv) if T[i][j] != 0), None)
            if col is not None:
                _pivot(T, i, col)
                basis[i] = col
    # phase 2
    sign = -1 if maximize else 1
    cost = [sign * Fraction(v) for v in c] + [Fraction(0)] * nslack
    obj = cost + [Fraction(0)] * m + [Fraction(0)]
    for i in range(m):
        if basis[i] < nv and cost[basis[i]] != 0:
            f = cost[basis[i]]
            obj = [o - f * v for o, v in zip(obj, T[i])]
    T[m] = obj
    allowed = [True] * nv + [False] * m
    status = _run(T, basis, nv + m, allowed)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * nv
    for i in range(m):
        if basis[i] < nv:
            x[basis[i]] = T[i][-1]
    value = sum(Fraction(ci) * xi for ci, xi in zip(c, x[:n]))
    return LPResult(OPTIMAL, value, x[:n])


def feasible(constraints, nvars: int) -> bool:
    return solve_lp([0] * nvars, constraints).status == OPTIMAL
