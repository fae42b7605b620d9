"""Error location and correction for scheme-derived MDS codes.

The pipeline: inner products with n - r check rows give syndromes; a
t x (t+1) Hankel matrix of syndromes has a nonzero kernel vector; that
vector, combined against t+1 locator rows, evaluates to a vector whose
zero set contains the error support; a small consistent linear system
then recovers the error values.  Failure (more than t errors detected)
is a first-class outcome status, never an exception.

Locator-row choice per code shape:
  * first-r-rows Fourier codes: rows E_1 .. E_{t+1}
  * arithmetic Fourier selections: rows F_0 .. F_t, F_0 = E_{(j1-k) mod n}
  * codes given by Vandermonde check rows: rows F_1 .. F_{t+1}
where F_i is the i-th check row and j1 its power index.
"""

from dataclasses import dataclass, field as dataclass_field

import numpy as np

from . import linalg
from .fields import Field
from .schemes import LinearCode, SchemeError, UnitScheme

STATUS_CORRECTED = "corrected"
STATUS_NO_ERROR = "no_error"
STATUS_FAILURE = "failure"


class DecodeSetupError(ValueError):
    """The code/arguments violate a decoding precondition."""


@dataclass
class Syndromes:
    """Inner products of the received word with the n - r check rows."""

    values: np.ndarray
    t: int

    @property
    def all_zero(self) -> bool:
        return not np.any(self.values)


@dataclass
class ErrorLocator:
    """Kernel vector, locator vector and its zero positions."""

    kernel_vector: np.ndarray
    locator: np.ndarray
    zero_set: tuple[int, ...]
    algorithm: str


@dataclass
class DecodeOutcome:
    status: str
    error_vector: np.ndarray | None = None
    corrected: np.ndarray | None = None
    message: np.ndarray | None = None
    error_count: int | None = None
    detail: str = ""
    syndromes: Syndromes | None = None
    locator: ErrorLocator | None = dataclass_field(default=None)

    @property
    def ok(self) -> bool:
        return self.status != STATUS_FAILURE


# ---------------------------------------------------------------------------


def _require_fourier(code: LinearCode, op: str):
    if code.scheme.kind != "fourier":
        raise DecodeSetupError(
            f"{op} works on fourier-kind codes; codes built from vandermonde row "
            "selections have no arithmetic check-row structure "
            "(use decode_with_check_rows for codes defined by Vandermonde check rows)"
        )
    if not code.mds_certified:
        raise DecodeSetupError(f"{op} requires an MDS-certified selection (step coprime to n)")


def compute_syndromes(code: LinearCode, received) -> Syndromes:
    """Syndromes of a length-n received word.

    For fourier codes the i-th syndrome pairs the word with check row
    E_{(i*step - start) mod n} (i = 1..n-r); otherwise the columns of D
    are used.  All-zero syndromes == the word is a codeword.
    """
    word = code.field.validate(received, "received word")
    if word.shape != (code.n,):
        raise DecodeSetupError(f"received word must have length {code.n}")
    if code.check_rows is not None:
        values = code.field.matmul(code.check_rows, word)
    else:
        values = code.field.matmul(word, code.D)
    return Syndromes(values=values, t=code.t)


def hankel_kernel(field: Field, alpha, t: int) -> np.ndarray:
    """Deterministic kernel vector of the t x (t+1) syndrome Hankel matrix.

    H[i, j] = alpha[i + j] (0-based).  Needs 2t syndrome values.
    """
    alpha = np.asarray(alpha, dtype=np.int64)
    if t < 1:
        raise DecodeSetupError("hankel_kernel needs t >= 1")
    if alpha.size < 2 * t:
        raise DecodeSetupError(f"need {2 * t} syndromes for t = {t}, got {alpha.size}")
    idx = np.arange(t, dtype=np.int64)[:, None] + np.arange(t + 1, dtype=np.int64)[None, :]
    H = alpha[idx]
    return linalg.nullspace_vector(field, H)


def _locator_from_rows(field: Field, rows: np.ndarray, kernel: np.ndarray):
    a = field.matmul(kernel, rows)
    zero_set = tuple(int(j) for j in np.nonzero(a == 0)[0])
    return a, zero_set


def _fourier_locator_exponents(code: LinearCode) -> list[int]:
    n, t = code.n, code.t
    k, s0 = code.selection.step, code.selection.start
    if s0 == 0 and k == 1:
        return [i for i in range(1, t + 2)]
    return [(i * k - s0) % n for i in range(0, t + 1)]


def locate_errors(code: LinearCode, kernel_vector) -> ErrorLocator:
    """Combine the kernel vector against the locator rows; zeros mark errors."""
    _require_fourier(code, "locate_errors")
    kernel = code.field.validate(kernel_vector, "kernel vector")
    if kernel.shape != (code.t + 1,):
        raise DecodeSetupError(f"kernel vector must have length t+1 = {code.t + 1}")
    exps = _fourier_locator_exponents(code)
    rows = code.scheme.U[np.asarray(exps, dtype=np.int64)]
    a, zero_set = _locator_from_rows(code.field, rows, kernel)
    algorithm = "first-rows" if (code.selection.start == 0 and code.selection.step == 1) else "arithmetic"
    return ErrorLocator(kernel_vector=kernel, locator=a, zero_set=zero_set, algorithm=algorithm)


def _solve_values_structured(field: Field, points_at_j, j1: int, k: int, alpha2t):
    """Solve for error values at the zero-set positions.

    System rows are x^(j1 + i*k) for i = 0..2t-1, x ranging over the
    points at the candidate positions.  Solved twice: directly by
    elimination on the full system, and through the factorization into
    a root-power Vandermonde times a diagonal; both routes must agree.
    Returns None when the system is inconsistent (too many errors).
    """
    m = points_at_j.size
    rows_count = alpha2t.size
    base = field.pow(points_at_j, j1)
    stepf = field.pow(points_at_j, k)
    M = np.empty((rows_count, m), dtype=np.int64)
    W = np.empty((rows_count, m), dtype=np.int64)
    M[0] = base
    W[0] = np.ones(m, dtype=np.int64)
    for i in range(1, rows_count):
        M[i] = field.mul(M[i - 1], stepf)
        W[i] = field.mul(W[i - 1], stepf)
    direct = linalg.solve_consistent(field, M, alpha2t)
    if direct is None:
        return None
    y = linalg.solve_consistent(field, W[:m], alpha2t[:m])
    if y is None or np.any(field.matmul(W[m:], y) != alpha2t[m:]):
        structured = None
    else:
        structured = field.div(y, base)
    assert structured is not None and np.array_equal(direct, structured), (
        "value-solver routes disagree"
    )
    return direct


def solve_error_values(code: LinearCode, syndromes: Syndromes, zero_set) -> np.ndarray | None:
    """Error vector supported on zero_set matching the first 2t syndromes.

    Returns None when no consistent assignment exists (detected
    uncorrectable pattern).  Zeros may legitimately appear at zero_set
    positions when the true weight is below |zero_set|.
    """
    _require_fourier(code, "solve_error_values")
    J = np.asarray(sorted(int(j) for j in zero_set), dtype=np.int64)
    t = code.t
    if J.size < 1 or J.size > 2 * t:
        raise DecodeSetupError(f"need 1 <= |zero set| <= {2 * t}, got {J.size}")
    if np.any(J < 0) or np.any(J >= code.n) or np.unique(J).size != J.size:
        raise DecodeSetupError("zero set must be distinct positions in [0, n)")
    k, s0 = code.selection.step, code.selection.start
    j1 = (k - s0) % code.n
    alpha2t = syndromes.values[: 2 * t]
    x = _solve_values_structured(code.field, code.scheme.points[J], j1, k, alpha2t)
    if x is None:
        return None
    w = np.zeros(code.n, dtype=np.int64)
    w[J] = x
    return w


# ---------------------------------------------------------------------------


def _finish(code_field, received, w, recompute_syndromes, t, syn, loc, message_of):
    """Shared tail: subtract, re-check every syndrome, package the outcome."""
    corrected = code_field.sub(received, w)
    residual = recompute_syndromes(corrected)
    if np.any(residual):
        return DecodeOutcome(
            status=STATUS_FAILURE,
            detail="corrected word still has nonzero syndromes (more than t errors)",
            syndromes=syn,
            locator=loc,
        )
    count = int(np.count_nonzero(w))
    if count > t:
        return DecodeOutcome(
            status=STATUS_FAILURE,
            detail=f"candidate error weight {count} exceeds capability t = {t}",
            syndromes=syn,
            locator=loc,
        )
    return DecodeOutcome(
        status=STATUS_CORRECTED,
        error_vector=w,
        corrected=corrected,
        message=message_of(corrected),
        error_count=count,
        syndromes=syn,
        locator=loc,
    )


def decode(code: LinearCode, received) -> DecodeOutcome:
    """Correct up to t = floor((n-r)/2) symbol errors in a received word.

    Returns an outcome whose status is "no_error", "corrected" or
    "failure"; weight-at-most-t errors are always corrected, heavier
    patterns yield failure or (when the word lands within distance t of
    another codeword) that other codeword.
    """
    _require_fourier(code, "decode")
    syn = compute_syndromes(code, received)
    word = code.field.validate(received, "received word")
    if syn.all_zero:
        return DecodeOutcome(
            status=STATUS_NO_ERROR,
            error_vector=np.zeros(code.n, dtype=np.int64),
            corrected=word,
            message=recover_message(code, word),
            error_count=0,
            syndromes=syn,
        )
    if code.t == 0:
        return DecodeOutcome(
            status=STATUS_FAILURE,
            detail="errors detected but the code corrects none (n - r < 2)",
            syndromes=syn,
        )
    kernel = hankel_kernel(code.field, syn.values, code.t)
    loc = locate_errors(code, kernel)
    if not loc.zero_set:
        return DecodeOutcome(
            status=STATUS_FAILURE,
            detail="locator vector has no zeros (more than t errors)",
            syndromes=syn,
            locator=loc,
        )
    w = solve_error_values(code, syn, loc.zero_set)
    if w is None:
        return DecodeOutcome(
            status=STATUS_FAILURE,
            detail="syndrome system is inconsistent (more than t errors)",
            syndromes=syn,
            locator=loc,
        )
    return _finish(
        code.field,
        word,
        w,
        lambda cw: compute_syndromes(code, cw).values,
        code.t,
        syn,
        loc,
        lambda cw: code.field.matmul(cw, code.C),
    )


def decode_single_error(code: LinearCode, received) -> DecodeOutcome:
    """Fast path for weight <= 1: match the syndrome against scalar
    multiples of the rows of D; fall back to the full decoder when the
    match is not unique."""
    _require_fourier(code, "decode_single_error")
    if code.t < 1:
        raise DecodeSetupError("decode_single_error needs t >= 1")
    word = code.field.validate(received, "received word")
    if word.shape != (code.n,):
        raise DecodeSetupError(f"received word must have length {code.n}")
    field = code.field
    sigma = field.matmul(word, code.D)
    if not np.any(sigma):
        return DecodeOutcome(
            status=STATUS_NO_ERROR,
            error_vector=np.zeros(code.n, dtype=np.int64),
            corrected=word,
            message=recover_message(code, word),
            error_count=0,
        )
    first_nz = np.argmax(code.D != 0, axis=1)
    rows_all_zero = ~code.D.any(axis=1)
    scale = field.div(sigma[first_nz], code.D[np.arange(code.n), first_nz])
    matches = (field.mul(scale[:, None], code.D) == sigma[None, :]).all(axis=1)
    matches &= (scale != 0) & ~rows_all_zero
    hits = np.nonzero(matches)[0]
    if hits.size != 1:
        return decode(code, received)
    j = int(hits[0])
    w = np.zeros(code.n, dtype=np.int64)
    w[j] = scale[j]
    corrected = field.sub(word, w)
    return DecodeOutcome(
        status=STATUS_CORRECTED,
        error_vector=w,
        corrected=corrected,
        message=field.matmul(corrected, code.C),
        error_count=1,
    )


def recover_message(code: LinearCode, codeword) -> np.ndarray:
    """Right-multiply by C to undo encoding; raises if not a codeword."""
    word = code.field.validate(codeword, "codeword")
    if word.shape != (code.n,):
        raise DecodeSetupError(f"codeword must have length {code.n}")
    if np.any(code.field.matmul(word, code.D)):
        raise DecodeSetupError("input is not a codeword (nonzero checks)")
    return code.field.matmul(word, code.C)


# ---------------------------------------------------------------------------


def decode_with_check_rows(scheme: UnitScheme, row_indices, received) -> DecodeOutcome:
    """Decode relative to explicit check rows (general Vandermonde shape).

    The code is {v : <v, E_j> = 0 for each given j}, with E_j the j-th
    power row of the scheme.  Row indices must form an arithmetic
    progression j1, j1+k, ..., and point ratios must not be k-th roots
    of unity; u rows correct up to floor(u/2) errors.  The outcome
    carries no message (the generator of such a code is not part of the
    scheme); use the corrected word directly.
    """
    field = scheme.field
    ids = [int(j) for j in row_indices]
    u = len(ids)
    if u < 2:
        raise DecodeSetupError("need at least two check rows")
    if len(set(ids)) != u:
        raise DecodeSetupError("check row indices must be distinct")
    if any(j < 0 for j in ids):
        raise DecodeSetupError("check row indices must be non-negative")
    diffs = {b - a for a, b in zip(ids, ids[1:])}
    if len(diffs) != 1:
        raise DecodeSetupError("check row indices must form an arithmetic progression")
    k = diffs.pop()
    if k < 1:
        raise DecodeSetupError("check row progression must be increasing")
    pts = scheme.points
    ratios = field.mul(pts[:, None], field.inv(pts)[None, :])
    powered = field.pow(ratios, k)
    if np.any(powered[~np.eye(scheme.n, dtype=bool)] == 1):
        raise DecodeSetupError(
            "point ratios include a k-th root of unity; error positions would be ambiguous"
        )
    word = field.validate(received, "received word")
    if word.shape != (scheme.n,):
        raise DecodeSetupError(f"received word must have length {scheme.n}")

    rows = np.stack([scheme.power_row(j) for j in ids])

    def syndromes_of(v):
        return field.matmul(rows, v)

    t = u // 2
    alpha = syndromes_of(word)
    syn = Syndromes(values=alpha, t=t)
    if not np.any(alpha):
        return DecodeOutcome(
            status=STATUS_NO_ERROR,
            error_vector=np.zeros(scheme.n, dtype=np.int64),
            corrected=word,
            error_count=0,
            syndromes=syn,
        )
    kernel = hankel_kernel(field, alpha[: 2 * t], t)
    a, zero_set = _locator_from_rows(field, rows[: t + 1], kernel)
    loc = ErrorLocator(kernel_vector=kernel, locator=a, zero_set=zero_set, algorithm="check-rows")
    if not zero_set:
        return DecodeOutcome(
            status=STATUS_FAILURE,
            detail="locator vector has no zeros (more than t errors)",
            syndromes=syn,
            locator=loc,
        )
    J = np.asarray(zero_set, dtype=np.int64)
    if J.size > 2 * t:
        return DecodeOutcome(
            status=STATUS_FAILURE,
            detail="locator zero set larger than the syndrome system",
            syndromes=syn,
            locator=loc,
        )
    x = _solve_values_structured(field, pts[J], ids[0], k, alpha[: 2 * t])
    if x is None:
        return DecodeOutcome(
            status=STATUS_FAILURE,
            detail="syndrome system is inconsistent (more than t errors)",
            syndromes=syn,
            locator=loc,
        )
    w = np.zeros(scheme.n, dtype=np.int64)
    w[J] = x
    return _finish(field, word, w, syndromes_of, t, syn, loc, lambda cw: None)
