"""Numba-jitted integer kernels (prime-field hot loops).

Only imported when the numba backend is active.  Each function has a
pure-numpy twin in _kernels_numpy.py with identical semantics; the
elimination routines share one pivot rule (first nonzero entry in
column order) so results are bit-identical across backends.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def inv_mod(a, p):
    # extended Euclid; a must be nonzero mod p
    a %= p
    t, new_t = 0, 1
    r, new_r = p, a
    while new_r != 0:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    return t % p


@njit(cache=True)
def matmul_mod(A, B, p):
    # accumulates in int64; caller guarantees k * (p-1)^2 < 2^63
    m, k = A.shape
    k2, n = B.shape
    out = np.zeros((m, n), dtype=np.int64)
    for i in range(m):
        for l in range(k):
            a = A[i, l]
            if a != 0:
                for j in range(n):
                    out[i, j] += a * B[l, j]
        for j in range(n):
            out[i, j] %= p
    return out


@njit(cache=True)
def rref_mod(M, p, pivots):
    """Reduce M in place to reduced row echelon form; returns rank.

    pivots is an int64 out-array of length >= min(M.shape); pivots[i]
    receives the pivot column of row i for i < rank.
    """
    rows, cols = M.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        pr = -1
        for r in range(rank, rows):
            if M[r, c] != 0:
                pr = r
                break
        if pr < 0:
            continue
        if pr != rank:
            for j in range(cols):
                tmp = M[rank, j]
                M[rank, j] = M[pr, j]
                M[pr, j] = tmp
        inv = inv_mod(M[rank, c], p)
        for j in range(cols):
            M[rank, j] = M[rank, j] * inv % p
        for r in range(rows):
            if r != rank and M[r, c] != 0:
                f = M[r, c]
                for j in range(cols):
                    M[r, j] = (M[r, j] - f * M[rank, j]) % p
        pivots[rank] = c
        rank += 1
    return rank


@njit(cache=True)
def invert_mod(M, p):
    """Gauss-Jordan inverse; returns (ok, inverse)."""
    n = M.shape[0]
    aug = np.zeros((n, 2 * n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            aug[i, j] = M[i, j]
        aug[i, n + i] = 1
    pivots = np.empty(2 * n, dtype=np.int64)
    rank = rref_mod(aug, p, pivots)
    # [M | I] always has rank n; M is invertible only when every pivot
    # stays inside the left block
    ok = rank == n
    for i in range(rank):
        if pivots[i] >= n:
            ok = False
    if not ok:
        return False, aug[:, n:]
    return True, np.ascontiguousarray(aug[:, n:])


@njit(cache=True)
def det_mod(M, p):
    """Determinant mod p by forward elimination."""
    n = M.shape[0]
    W = M.copy()
    det = 1
    sign = 1
    for c in range(n):
        pr = -1
        for r in range(c, n):
            if W[r, c] != 0:
                pr = r
                break
        if pr < 0:
            return 0
        if pr != c:
            sign = -sign
            for j in range(n):
                tmp = W[c, j]
                W[c, j] = W[pr, j]
                W[pr, j] = tmp
        det = det * W[c, c] % p
        inv = inv_mod(W[c, c], p)
        for r in range(c + 1, n):
            if W[r, c] != 0:
                f = W[r, c] * inv % p
                for j in range(c, n):
                    W[r, j] = (W[r, j] - f * W[c, j]) % p
    if sign < 0:
        det = (p - det) % p
    return det


@njit(cache=True)
def nearest_scan(codebook, batch, out_idx, out_dist, out_ties):
    """For each row of batch, nearest row of codebook by Hamming distance.

    Scans in codebook order, keeping the first codeword that achieves the
    best distance and the count of codewords tying it.
    """
    m, n = codebook.shape
    for b in range(batch.shape[0]):
        best = n + 1
        besti = -1
        ties = 0
        for i in range(m):
            d = 0
            over = False
            for j in range(n):
                if codebook[i, j] != batch[b, j]:
                    d += 1
                    if d > best:
                        over = True
                        break
            if over:
                continue
            if d < best:
                best = d
                besti = i
                ties = 1
            elif d == best:
                ties += 1
        out_idx[b] = besti
        out_dist[b] = best
        out_ties[b] = ties


@njit(cache=True)
def min_weight_enum(A, p, total):
    """Minimum Hamming weight over the q^r nonzero combinations of A's rows.

    Enumerates messages in odometer order, updating the running codeword
    incrementally (one row-add per step, amortized).
    """
    r, n = A.shape
    msg = np.zeros(r, dtype=np.int64)
    cw = np.zeros(n, dtype=np.int64)
    best = n + 1
    for _ in range(total - 1):
        d = r - 1
        while True:
            msg[d] += 1
            for j in range(n):
                cw[j] += A[d, j]
                if cw[j] >= p:
                    cw[j] -= p
            if msg[d] < p:
                break
            msg[d] = 0
            d -= 1
        w = 0
        for j in range(n):
            if cw[j] != 0:
                w += 1
        if w < best:
            best = w
    return best
