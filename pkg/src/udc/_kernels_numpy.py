"""Pure-numpy twins of the numba kernels (fallback backend).

Same signatures and same results as _kernels_numba.py; elimination uses
the identical first-nonzero pivot rule so outputs match bit for bit.
"""

import numpy as np

# Keep intermediate boolean/product blocks under ~2^26 elements.
_CHUNK_ELEMS = 1 << 26


def inv_mod(a, p):
    return pow(int(a) % p, -1, p)


def matmul_mod(A, B, p):
    # caller guarantees k * (p-1)^2 < 2^63
    return (A @ B) % p


def rref_mod(M, p, pivots):
    """Reduce M in place to reduced row echelon form; returns rank."""
    rows, cols = M.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(M[rank:, c])[0]
        if nz.size == 0:
            continue
        pr = rank + int(nz[0])
        if pr != rank:
            M[[rank, pr]] = M[[pr, rank]]
        M[rank] = M[rank] * inv_mod(M[rank, c], p) % p
        others = np.nonzero(M[:, c])[0]
        others = others[others != rank]
        if others.size:
            M[others] = (M[others] - np.outer(M[others, c], M[rank])) % p
        pivots[rank] = c
        rank += 1
    return rank


def invert_mod(M, p):
    n = M.shape[0]
    aug = np.zeros((n, 2 * n), dtype=np.int64)
    aug[:, :n] = M
    aug[np.arange(n), n + np.arange(n)] = 1
    pivots = np.empty(2 * n, dtype=np.int64)
    rank = rref_mod(aug, p, pivots)
    # [M | I] always has rank n; M is invertible only when every pivot
    # stays inside the left block
    if rank != n or np.any(pivots[:rank] >= n):
        return False, aug[:, n:]
    return True, np.ascontiguousarray(aug[:, n:])


def det_mod(M, p):
    n = M.shape[0]
    W = M.copy()
    det = 1
    sign = 1
    for c in range(n):
        nz = np.nonzero(W[c:, c])[0]
        if nz.size == 0:
            return 0
        pr = c + int(nz[0])
        if pr != c:
            sign = -sign
            W[[c, pr]] = W[[pr, c]]
        det = det * int(W[c, c]) % p
        inv = inv_mod(W[c, c], p)
        below = c + 1 + np.nonzero(W[c + 1 :, c])[0]
        if below.size:
            f = W[below, c] * inv % p
            W[below] = (W[below] - np.outer(f, W[c])) % p
    if sign < 0:
        det = (p - det) % p
    return det


def nearest_scan(codebook, batch, out_idx, out_dist, out_ties):
    m, n = codebook.shape
    step = max(1, _CHUNK_ELEMS // max(1, m * n))
    for lo in range(0, batch.shape[0], step):
        chunk = batch[lo : lo + step]
        dist = (chunk[:, None, :] != codebook[None, :, :]).sum(axis=2)
        best = dist.min(axis=1)
        out_idx[lo : lo + step] = dist.argmin(axis=1)
        out_dist[lo : lo + step] = best
        out_ties[lo : lo + step] = (dist == best[:, None]).sum(axis=1)


def min_weight_enum(A, p, total):
    r, n = A.shape
    radix = p ** np.arange(r - 1, -1, -1, dtype=np.int64)
    step = max(1, _CHUNK_ELEMS // max(1, r * n))
    best = n + 1
    for lo in range(1, total, step):
        ids = np.arange(lo, min(lo + step, total), dtype=np.int64)
        digits = ids[:, None] // radix % p
        weights = np.count_nonzero(digits @ A % p, axis=1)
        best = min(best, int(weights.min()))
    return best
