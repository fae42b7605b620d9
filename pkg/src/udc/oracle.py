"""Exhaustive ground-truth tools: codebook enumeration, nearest-codeword
search and exact minimum distance.

Everything here is brute force by design — independent of the algebraic
decoder so the two can be checked against each other.  Guarded by size
limits; intended for small parameter sets.
"""

import itertools

import numpy as np

from . import kernels, linalg
from .fields import Field
from .schemes import LinearCode

_ENUM_LIMIT = 10_000_000  # max number of messages enumerated exhaustively


class OracleError(ValueError):
    """Requested exhaustive computation exceeds the configured limits."""


def message_count(code: LinearCode) -> int:
    return code.field.q ** code.r


def message_block(field: Field, r: int, start: int, stop: int) -> np.ndarray:
    """Messages start..stop-1 as rows, lexicographic by symbol (first
    symbol most significant)."""
    q = field.q
    idx = np.arange(start, stop, dtype=np.int64)
    weights = q ** np.arange(r - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // weights[None, :]) % q


def codebook(code: LinearCode, limit: int = _ENUM_LIMIT) -> np.ndarray:
    """All q^r codewords, row i encoding message number i."""
    total = message_count(code)
    if total > limit:
        raise OracleError(f"codebook would hold {total} words (limit {limit})")
    return code.field.matmul(message_block(code.field, code.r, 0, total), code.A)


def nearest_codewords(book: np.ndarray, words) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """For each query row: index of the first closest codebook row, its
    Hamming distance, and how many rows tie at that distance."""
    words = np.ascontiguousarray(np.atleast_2d(np.asarray(words, dtype=np.int64)))
    if words.shape[1] != book.shape[1]:
        raise OracleError("query length does not match the codebook")
    out_idx = np.empty(words.shape[0], dtype=np.int64)
    out_dist = np.empty(words.shape[0], dtype=np.int64)
    out_ties = np.empty(words.shape[0], dtype=np.int64)
    kernels.nearest_scan(np.ascontiguousarray(book), words, out_idx, out_dist, out_ties)
    return out_idx, out_dist, out_ties


def brute_force_decode(code: LinearCode, received, book: np.ndarray | None = None):
    """Nearest-codeword decoding by full scan.

    Returns (codeword, message, distance, ties); ties > 1 means the
    received word sits at equal distance from several codewords, where
    any decoder's answer is ambiguous.
    """
    if book is None:
        book = codebook(code)
    idx, dist, ties = nearest_codewords(book, received)
    i = int(idx[0])
    word = book[i].copy()
    return word, code.field.matmul(word, code.C), int(dist[0]), int(ties[0])


# ---------------------------------------------------------------------------


def _min_distance_enumerate(field: Field, A: np.ndarray, limit: int) -> int:
    r, n = A.shape
    total = field.q ** r
    if total > limit:
        raise OracleError(f"enumeration over {total} messages exceeds limit {limit}")
    if field.is_prime:
        return int(kernels.min_weight_enum(np.ascontiguousarray(A), field.p, total))
    best = n
    chunk = max(1, min(total, (1 << 22) // max(1, n)))
    for start in range(1, total, chunk):
        stop = min(start + chunk, total)
        words = field.matmul(message_block(field, r, start, stop), A)
        best = min(best, int(np.count_nonzero(words, axis=1).min()))
        if best == 1:
            break
    return best


def _min_distance_subset_rank(field: Field, A: np.ndarray) -> int:
    """d = n - max{|T| : the columns T of A are rank deficient}.

    A nonzero codeword vanishing on T exists exactly when A[:, T] has
    rank below r, so the largest such T fixes the minimum weight.
    Cost 2^n rank computations; exact for any field.
    """
    r, n = A.shape
    for size in range(n - 1, r - 2, -1):
        if size < 0:
            break
        for T in itertools.combinations(range(n), size):
            cols = np.ascontiguousarray(A[:, list(T)]) if T else np.empty((r, 0), dtype=np.int64)
            if size < r or linalg.matrix_rank(field, cols) < r:
                return n - size
    return n  # r == 0 never happens; defensive
    # note: size == r - 1 always rank deficient, so the loop terminates
    # with d <= n - r + 1 (Singleton bound)


def min_distance(code: LinearCode, method: str = "auto", limit: int = _ENUM_LIMIT) -> int:
    """Exact minimum Hamming distance of the code.

    method "enumerate" scans every nonzero message (feasible when q^r
    is small), "subset-rank" scans column subsets (feasible when n is
    small, any q), "auto" picks whichever fits.
    """
    if method == "auto":
        method = "enumerate" if message_count(code) <= limit else "subset-rank"
    if method == "enumerate":
        return _min_distance_enumerate(code.field, code.A, limit)
    if method == "subset-rank":
        if code.n > 24:
            raise OracleError(f"subset-rank scan over n = {code.n} columns is too large")
        return _min_distance_subset_rank(code.field, code.A)
    raise OracleError(f"unknown method {method!r}")
