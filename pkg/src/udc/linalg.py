"""Exact linear algebra over finite fields.

All elimination routines use the same deterministic pivot rule: columns
are processed left to right and the pivot is the first row (top-down)
with a nonzero entry.  Prime fields dispatch to the active kernel
backend; extension fields use generic vectorized field operations.
Results are identical across backends.
"""

import numpy as np

from . import kernels
from .fields import Field


class LinAlgError(ValueError):
    """Singular / underdetermined system where a unique answer was required."""


def _rref_generic(field: Field, M: np.ndarray):
    rows, cols = M.shape
    rank = 0
    pivots = []
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(M[rank:, c])[0]
        if nz.size == 0:
            continue
        pr = rank + int(nz[0])
        if pr != rank:
            M[[rank, pr]] = M[[pr, rank]]
        M[rank] = field.mul(M[rank], field.inv(int(M[rank, c])))
        others = np.nonzero(M[:, c])[0]
        others = others[others != rank]
        if others.size:
            M[others] = field.sub(M[others], field.mul(M[others, c][:, None], M[rank][None, :]))
        pivots.append(c)
        rank += 1
    return M, pivots, rank


def rref(field: Field, M) -> tuple[np.ndarray, list[int], int]:
    """Reduced row echelon form; returns (R, pivot_columns, rank)."""
    M = np.array(M, dtype=np.int64, ndmin=2)
    if field.is_prime:
        pivots = np.empty(min(M.shape), dtype=np.int64)
        rank = int(kernels.rref_mod(M, field.p, pivots))
        return M, [int(c) for c in pivots[:rank]], rank
    return _rref_generic(field, M)


def matrix_rank(field: Field, M) -> int:
    return rref(field, M)[2]


def nullspace_vector(field: Field, M) -> np.ndarray:
    """One deterministic kernel vector of M.

    The first free column of the reduced echelon form is set to 1, every
    other free column to 0, and pivot columns are back-filled.  Raises
    LinAlgError when M has full column rank.
    """
    M = np.asarray(M, dtype=np.int64)
    R, pivots, rank = rref(field, M)
    cols = M.shape[1]
    free = [c for c in range(cols) if c not in set(pivots)]
    if not free:
        raise LinAlgError("matrix has full column rank, kernel is trivial")
    f = free[0]
    x = np.zeros(cols, dtype=np.int64)
    x[f] = 1
    for i, c in enumerate(pivots):
        x[c] = field.neg(int(R[i, f]))
    return x


def solve_consistent(field: Field, M, b):
    """Unique solution x of M x = b (M may be overdetermined).

    Returns None when the system is inconsistent; raises LinAlgError
    when M does not have full column rank.
    """
    M = np.asarray(M, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    rows, cols = M.shape
    aug = np.concatenate([M, b.reshape(rows, 1)], axis=1)
    R, pivots, rank = rref(field, aug)
    if cols in pivots:
        return None  # pivot in the rhs column: inconsistent
    if len(pivots) < cols:
        raise LinAlgError("underdetermined system")
    x = np.zeros(cols, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = R[i, cols]
    return x


def invert(field: Field, M) -> np.ndarray:
    """Inverse matrix by Gauss-Jordan elimination; LinAlgError if singular."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[0]
    if M.shape != (n, n):
        raise LinAlgError(f"cannot invert non-square matrix of shape {M.shape}")
    if field.is_prime:
        ok, inv = kernels.invert_mod(np.ascontiguousarray(M), field.p)
        if not ok:
            raise LinAlgError("matrix is singular")
        return inv
    aug = np.zeros((n, 2 * n), dtype=np.int64)
    aug[:, :n] = M
    aug[np.arange(n), n + np.arange(n)] = 1
    _, pivots, rank = _rref_generic(field, aug)
    # [M | I] always has rank n; M is invertible only when every pivot
    # stays inside the left block
    if rank != n or any(c >= n for c in pivots):
        raise LinAlgError("matrix is singular")
    return np.ascontiguousarray(aug[:, n:])


def determinant(field: Field, M) -> int:
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[0]
    if M.shape != (n, n):
        raise LinAlgError(f"determinant needs a square matrix, got {M.shape}")
    if n == 0:
        return field.from_int(1)
    if field.is_prime:
        return int(kernels.det_mod(np.ascontiguousarray(M), field.p))
    W = M.copy()
    det = field.from_int(1)
    sign = 1
    for c in range(n):
        nz = np.nonzero(W[c:, c])[0]
        if nz.size == 0:
            return 0
        pr = c + int(nz[0])
        if pr != c:
            sign = -sign
            W[[c, pr]] = W[[pr, c]]
        det = field.mul(det, int(W[c, c]))
        inv = field.inv(int(W[c, c]))
        below = c + 1 + np.nonzero(W[c + 1 :, c])[0]
        if below.size:
            f = field.mul(W[below, c], inv)
            W[below] = field.sub(W[below], field.mul(f[:, None], W[c][None, :]))
    return field.neg(det) if sign < 0 else det
