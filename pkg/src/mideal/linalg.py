"""Exact linear algebra over a prime field GF(p).

Matrices are int64 numpy arrays with entries in ``[0, p)``.  ``p`` must stay
below 2**31 so that products of two reduced entries fit in int64.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_CHARACTERISTIC = 32003


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = DEFAULT_CHARACTERISTIC

    def __post_init__(self):
        p = self.characteristic
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if p >= 1 << 31:
            raise ValueError("characteristic must be below 2**31")

    @property
    def p(self) -> int:
        return self.characteristic


def as_field(field: "FieldSpec | int | None") -> FieldSpec:
    if field is None:
        return FieldSpec()
    if isinstance(field, FieldSpec):
        return field
    return FieldSpec(int(field))


def row_reduce(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``A`` mod p and its pivot columns."""
    M = np.array(A, dtype=np.int64) % p
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            M[[r, k]] = M[[k, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = (M[r] * inv) % p
        col = M[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            M[hit] = (M[hit] - np.outer(col[hit], M[r])) % p
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank_mod_p(A: np.ndarray, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    # Eliminating along the shorter side is cheaper; rank is transpose-invariant.
    if A.shape[0] > A.shape[1]:
        A = A.T
    return len(row_reduce(A, p)[1])


def nullspace_mod_p(A: np.ndarray, p: int) -> np.ndarray:
    """Basis of ``{v : A v = 0}`` as the rows of the returned array."""
    A = np.asarray(A, dtype=np.int64)
    rows, cols = A.shape
    if cols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    R, pivots = row_reduce(A, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-R[i, f]) % p
    return basis
