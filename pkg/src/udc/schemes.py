"""Invertible-pair schemes and the codes carved out of them.

A scheme is a pair of n x n matrices U, V over a finite field with
U V = I.  Two constructions are provided: the Fourier matrix of a
primitive n-th root of unity (V known in closed form), and a general
Vandermonde matrix on distinct nonzero points (V by exact elimination).
Selecting r rows of U yields a generator matrix A; the matching columns
of V give a right inverse C (A C = I) and the remaining columns a check
matrix D (A D = 0).  An arithmetic row selection with the right step
makes the code MDS with distance n - r + 1.
"""

import math

import numpy as np

from . import linalg
from .fields import Field, field_from_spec, format_field_spec

# schemes are dense n x n; keep them desk-sized
_MAX_N = 4096


class SchemeError(ValueError):
    """Invalid scheme construction or row selection."""


class UnitScheme:
    """Matrix pair U, V with U V = I, built on evaluation points.

    U[i, j] = points[j] ** i.  kind is "fourier" (points are the powers
    of a primitive n-th root of unity omega) or "vandermonde".
    """

    def __init__(self, field: Field, kind: str, points: np.ndarray, U, V, omega=None):
        self.field = field
        self.kind = kind
        self.points = points
        self.n = len(points)
        self.U = U
        self.V = V
        self.omega = omega
        ident = identity_matrix(self.n)
        if not np.array_equal(field.matmul(U, V), ident):
            raise SchemeError("U V != I; scheme construction is inconsistent")

    def __repr__(self):
        return f"UnitScheme(kind={self.kind!r}, n={self.n}, field={self.field!r})"

    def power_row(self, m: int) -> np.ndarray:
        """The row (points[0]^m, ..., points[n-1]^m) for any integer m >= 0.

        For m < n this is U[m]; larger m extends the power pattern (for
        Fourier schemes the rows repeat with period n).
        """
        if 0 <= m < self.n:
            return self.U[m]
        if self.kind == "fourier":
            return self.U[m % self.n]
        return self.field.pow(self.points, m)


def identity_matrix(n: int) -> np.ndarray:
    ident = np.zeros((n, n), dtype=np.int64)
    np.fill_diagonal(ident, 1)
    return ident


def _powers(field: Field, x: int, count: int) -> np.ndarray:
    """x^0, x^1, ..., x^(count-1) as an encoded vector."""
    out = np.empty(count, dtype=np.int64)
    cur = 1
    if field.is_prime:
        p = field.p
        for i in range(count):
            out[i] = cur
            cur = cur * x % p
    else:
        for i in range(count):
            out[i] = cur
            cur = field.mul(cur, x)
    return out


def fourier_scheme(field: Field, n: int) -> UnitScheme:
    """The n x n Fourier scheme over `field`.

    Requires n | q - 1.  omega is the canonical (smallest-encoding)
    element of multiplicative order n; V is n^{-1} [omega^{-ij}].
    """
    if n < 1:
        raise SchemeError("n must be positive")
    if n > _MAX_N:
        raise SchemeError(f"n = {n} exceeds the supported dense-scheme size {_MAX_N}")
    if (field.q - 1) % n != 0:
        raise SchemeError(f"no Fourier matrix of size {n} over {field}: {n} does not divide q-1")
    omega = field.find_element_of_order(n)
    pows = _powers(field, omega, n)
    ij = np.outer(np.arange(n, dtype=np.int64), np.arange(n, dtype=np.int64))
    U = pows[ij % n]
    n_inv = field.inv(field.from_int(n))
    V = field.mul(n_inv, pows[(-ij) % n])
    return UnitScheme(field, "fourier", pows.copy(), U, V, omega=omega)


def vandermonde_scheme(field: Field, points) -> UnitScheme:
    """A Vandermonde scheme on pairwise-distinct nonzero points."""
    pts = field.validate(points, "points")
    if pts.ndim != 1 or pts.size < 1:
        raise SchemeError("points must be a nonempty vector")
    n = pts.size
    if n > _MAX_N:
        raise SchemeError(f"n = {n} exceeds the supported dense-scheme size {_MAX_N}")
    if np.any(pts == 0):
        raise SchemeError("points must be nonzero")
    if np.unique(pts).size != n:
        raise SchemeError("points must be pairwise distinct")
    U = np.empty((n, n), dtype=np.int64)
    U[0] = 1
    for i in range(1, n):
        U[i] = field.mul(U[i - 1], pts)
    V = linalg.invert(field, U)
    return UnitScheme(field, "vandermonde", pts, U, V)


# ---------------------------------------------------------------------------


class RowSelection:
    """An arithmetic choice of rows: start, start+step, ..., (count rows)."""

    def __init__(self, start: int, step: int, count: int):
        if count < 1:
            raise SchemeError("selection needs at least one row")
        if start < 0:
            raise SchemeError("start must be non-negative")
        if step < 1:
            raise SchemeError("step must be positive")
        self.start = start
        self.step = step
        self.count = count

    def __repr__(self):
        return f"RowSelection(start={self.start}, step={self.step}, count={self.count})"

    def __eq__(self, other):
        return (
            isinstance(other, RowSelection)
            and (self.start, self.step, self.count) == (other.start, other.step, other.count)
        )

    def indices(self, scheme: UnitScheme) -> np.ndarray:
        """Resolved 0-based row indices for the given scheme.

        Fourier selections wrap modulo n; Vandermonde selections must
        stay inside [0, n).  Indices must be pairwise distinct.
        """
        n = scheme.n
        if self.count >= n:
            raise SchemeError(f"selection of {self.count} rows needs count < n = {n}")
        raw = self.start + self.step * np.arange(self.count, dtype=np.int64)
        if scheme.kind == "fourier":
            idx = raw % n
        else:
            if raw[-1] >= n:
                raise SchemeError(
                    f"selection reaches row {int(raw[-1])} but a vandermonde scheme has no wrap-around"
                )
            idx = raw
        if np.unique(idx).size != self.count:
            raise SchemeError("selected rows are not pairwise distinct")
        return idx


class LinearCode:
    """An [n, r] code generated by selected scheme rows.

    A = selected rows of U (generator), C = matching columns of V
    (A C = I, message recovery), D = remaining columns of V in ascending
    order (A D = 0, check matrix).  mds_certified marks selections whose
    step passes the MDS predicate; then the distance is n - r + 1.
    """

    def __init__(self, scheme: UnitScheme, selection: RowSelection):
        idx = selection.indices(scheme)
        self.scheme = scheme
        self.selection = selection
        self.field = scheme.field
        self.n = scheme.n
        self.r = int(selection.count)
        self.row_indices = tuple(int(i) for i in idx)
        comp = np.setdiff1d(np.arange(self.n, dtype=np.int64), idx)
        self.A = np.ascontiguousarray(scheme.U[idx])
        self.C = np.ascontiguousarray(scheme.V[:, idx])
        self.D = np.ascontiguousarray(scheme.V[:, comp])
        field = self.field
        if not np.array_equal(field.matmul(self.A, self.C), identity_matrix(self.r)):
            raise SchemeError("A C != I; code derivation is inconsistent")
        if self.D.size and np.any(field.matmul(self.A, self.D)):
            raise SchemeError("A D != 0; code derivation is inconsistent")
        self.mds_certified = mds_predicate(scheme, selection)
        self.claimed_distance = self.n - self.r + 1 if self.mds_certified else None
        self.t = (self.n - self.r) // 2
        if scheme.kind == "fourier" and self.mds_certified:
            # row j pairs to zero against row i exactly when i + j = 0
            # (mod n); with step coprime to n the rows E_{(i*step - start)
            # mod n}, i = 1..n-r, annihilate every selected row
            k, s0 = selection.step, selection.start
            ids = [(i * k - s0) % self.n for i in range(1, self.n - self.r + 1)]
            self.check_row_indices = tuple(ids)
            self.check_rows = np.ascontiguousarray(scheme.U[np.array(ids, dtype=np.int64)])
        else:
            self.check_row_indices = None
            self.check_rows = None

    def __repr__(self):
        d = self.claimed_distance if self.claimed_distance is not None else "?"
        return f"LinearCode[n={self.n}, r={self.r}, d={d}] over {self.field!r}"

    @property
    def descriptor(self) -> str:
        return format_code_descriptor(self)

    def encode(self, message) -> np.ndarray:
        """message (length r, or a batch of shape (m, r)) times A."""
        msg = self.field.validate(message, "message")
        if msg.shape[-1] != self.r:
            raise SchemeError(f"message length {msg.shape[-1]} != r = {self.r}")
        return self.field.matmul(msg, self.A)


def derive_code(scheme: UnitScheme, selection: RowSelection) -> LinearCode:
    """Carve the [n, count] code of `selection` out of `scheme`."""
    return LinearCode(scheme, selection)


def mds_predicate(scheme: UnitScheme, selection: RowSelection) -> bool:
    """True guarantees distance n - r + 1 for the selected code.

    Fourier: the row step must be coprime to n.  Vandermonde: no ratio
    of two distinct points may be a step-th root of unity.  False means
    "not certified", not "provably non-MDS".
    """
    selection.indices(scheme)  # validate against this scheme
    k = selection.step
    if scheme.kind == "fourier":
        return math.gcd(scheme.n, k) == 1
    field = scheme.field
    pts = scheme.points
    ratios = field.mul(pts[:, None], field.inv(pts)[None, :])
    powered = field.pow(ratios, k)
    off_diag = ~np.eye(scheme.n, dtype=bool)
    return not np.any(powered[off_diag] == 1)


def star_multiply(field: Field, a, b) -> np.ndarray:
    """Coordinatewise (star) product of two equal-length vectors."""
    va = field.validate(a, "star operand")
    vb = field.validate(b, "star operand")
    if va.shape != vb.shape or va.ndim != 1:
        raise SchemeError(f"star product needs equal-length vectors, got {va.shape} and {vb.shape}")
    return field.mul(va, vb)


def vandermonde_minor_det(scheme: UnitScheme, row_indices, col_indices) -> int:
    """Determinant of the minor U[rows, cols] for arithmetic row sets.

    Rows must form an arithmetic progression (difference k).  Computed
    directly by elimination and again through the factorization
    prod_m points[cols[m]]^rows[0] * Vandermonde-det(points[cols]^k);
    the two routes must agree (internal assertion).
    """
    rows = np.asarray(row_indices, dtype=np.int64)
    cols = np.asarray(col_indices, dtype=np.int64)
    if rows.ndim != 1 or cols.ndim != 1 or rows.size != cols.size or rows.size < 1:
        raise SchemeError("need equally sized row and column index vectors")
    s = rows.size
    if np.unique(rows).size != s or np.unique(cols).size != s:
        raise SchemeError("row and column indices must be pairwise distinct")
    if np.any(rows < 0) or np.any(rows >= scheme.n) or np.any(cols < 0) or np.any(cols >= scheme.n):
        raise SchemeError("indices out of range")
    diffs = np.diff(rows)
    if s > 1 and np.unique(diffs).size != 1:
        raise SchemeError("row indices must form an arithmetic progression")
    k = int(diffs[0]) if s > 1 else 1
    if s > 1 and k < 1:
        raise SchemeError("row progression must be increasing")
    field = scheme.field
    direct = linalg.determinant(field, scheme.U[np.ix_(rows, cols)])
    pts = scheme.points[cols]
    prefactor = field.from_int(1)
    for x in field.pow(pts, int(rows[0])):
        prefactor = field.mul(prefactor, int(x))
    y = field.pow(pts, k)
    vdm = field.from_int(1)
    for b in range(1, s):
        for v in np.atleast_1d(field.sub(y[b], y[:b])):
            vdm = field.mul(vdm, int(v))
    factored = field.mul(prefactor, vdm)
    assert direct == factored, "minor determinant routes disagree"
    return int(direct)


# ---------------------------------------------------------------------------
# code descriptor text form


def format_code_descriptor(code: LinearCode) -> str:
    sel = code.selection
    return (
        f"field={format_field_spec(code.field)};n={code.n};start={sel.start};"
        f"step={sel.step};r={sel.count};kind={code.scheme.kind}"
    )


def parse_code_descriptor(text: str) -> dict:
    """Parse 'field=...;n=...;start=...;step=...;r=...;kind=...' into a dict."""
    parts = {}
    for chunk in text.strip().split(";"):
        if "=" not in chunk:
            raise SchemeError(f"bad descriptor component {chunk!r}")
        key, value = chunk.split("=", 1)
        parts[key.strip()] = value.strip()
    missing = {"field", "n", "start", "step", "r", "kind"} - parts.keys()
    if missing:
        raise SchemeError(f"descriptor is missing {sorted(missing)}")
    if parts["kind"] not in ("fourier", "vandermonde"):
        raise SchemeError(f"unknown scheme kind {parts['kind']!r}")
    try:
        out = {
            "field": parts["field"],
            "n": int(parts["n"]),
            "start": int(parts["start"]),
            "step": int(parts["step"]),
            "r": int(parts["r"]),
            "kind": parts["kind"],
        }
    except ValueError as exc:
        raise SchemeError(f"bad descriptor value: {exc}") from None
    return out


def code_from_descriptor(text: str) -> LinearCode:
    """Rebuild a Fourier code from its descriptor string.

    Vandermonde descriptors do not carry their evaluation points and
    cannot be reconstructed from text.
    """
    parts = parse_code_descriptor(text)
    if parts["kind"] != "fourier":
        raise SchemeError("only fourier codes can be rebuilt from a descriptor")
    field = field_from_spec(parts["field"])
    scheme = fourier_scheme(field, parts["n"])
    return derive_code(scheme, RowSelection(parts["start"], parts["step"], parts["r"]))
