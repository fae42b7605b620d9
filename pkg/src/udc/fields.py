"""Exact finite-field arithmetic: GF(p) and GF(p^s).

Elements are canonically encoded as integers in [0, q).  For prime
fields the encoding is the residue itself; for extension fields the
value sum(c_i * p^i) encodes the reduced polynomial sum(c_i * x^i), so
numeric order equals lexicographic order on (c_{s-1}, ..., c_0).
Vectors and matrices are int64 numpy arrays of encoded elements, and a
Field instance provides vectorized arithmetic on them.

Extension fields keep exp/log tables over a multiplicative generator
(bounded by _TABLE_LIMIT); this is an internal speedup only, results are
identical to direct polynomial arithmetic on coefficient vectors.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import backend, kernels, ntheory

# Largest extension-field order for which exp/log tables are materialized.
_TABLE_LIMIT = 1 << 22


class FieldError(ValueError):
    """Invalid field construction or invalid field operation."""


# ---------------------------------------------------------------------------
# field spec text form: "p", "p^s" (modulus searched), or
# "p^s/c_s,...,c_0" with explicit descending modulus coefficients


def parse_field_spec(text: str) -> tuple[int, int, tuple[int, ...] | None]:
    """Parse a field spec string into (p, s, modulus-or-None)."""
    text = text.strip()
    try:
        if "^" not in text:
            if "/" in text:
                raise ValueError("modulus given without an extension degree")
            return int(text), 1, None
        base, rest = text.split("^", 1)
        if "/" not in rest:
            return int(base), int(rest), None
        deg, coeff_text = rest.split("/", 1)
        p, s = int(base), int(deg)
        coeffs = tuple(int(c) for c in coeff_text.split(","))
        if len(coeffs) != s + 1:
            raise ValueError(f"modulus needs {s + 1} coefficients, got {len(coeffs)}")
        return p, s, coeffs
    except ValueError as exc:
        raise FieldError(f"bad field spec {text!r}: {exc}") from None


def format_field_spec(field: "Field") -> str:
    """Inverse of parse_field_spec; round-trips exactly."""
    if field.s == 1:
        return str(field.p)
    coeffs = ",".join(str(c) for c in field.modulus)
    return f"{field.p}^{field.s}/{coeffs}"


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldElement:
    """A single field element: an encoded value tied to its field."""

    field: "Field"
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise FieldError(f"value {self.value} outside {self.field}")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"mixed fields: {self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.field.from_int(int(other))
        return None

    def _wrap(self, value):
        return FieldElement(self.field, int(value))

    def __add__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is None else self._wrap(self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is None else self._wrap(self.field.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is None else self._wrap(self.field.sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is None else self._wrap(self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is None else self._wrap(self.field.div(self.value, v))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is None else self._wrap(self.field.div(v, self.value))

    def __pow__(self, e):
        return self._wrap(self.field.pow(self.value, int(e)))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def order(self) -> int:
        return self.field.element_order(self.value)

    def __repr__(self):
        if self.field.s == 1:
            return f"{self.field!r}({self.value})"
        return f"{self.field!r}({','.join(map(str, self.coeffs))})"


# ---------------------------------------------------------------------------


class Field:
    """Common behaviour for GF(p) and GF(p^s); see module docstring."""

    p: int
    s: int
    q: int
    modulus: tuple[int, ...] | None

    # ---- identity / display

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.s == other.s
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.s, self.modulus))

    def __repr__(self):
        return f"GF({self.p})" if self.s == 1 else f"GF({self.p}^{self.s})"

    @property
    def spec(self) -> str:
        return format_field_spec(self)

    @property
    def is_prime(self) -> bool:
        return self.s == 1

    # ---- element plumbing

    def element(self, v) -> FieldElement:
        """Wrap an encoded value or coefficient sequence as a FieldElement."""
        if isinstance(v, FieldElement):
            if v.field != self:
                raise FieldError(f"mixed fields: {self} vs {v.field}")
            return v
        if isinstance(v, (tuple, list)):
            return FieldElement(self, self.from_coeffs(v))
        return FieldElement(self, int(v))

    def from_int(self, m: int) -> int:
        """Image of the rational integer m (constant polynomial m mod p)."""
        return m % self.p

    def validate(self, a, shape_hint: str = "operand") -> np.ndarray:
        """Copy input into a range-checked int64 array of encoded values."""
        raw = np.asarray(a)
        if not np.issubdtype(raw.dtype, np.integer):
            raise FieldError(f"{shape_hint} must hold integers, not {raw.dtype}")
        arr = raw.astype(np.int64)
        if arr.size and (arr.min() < 0 or arr.max() >= self.q):
            raise FieldError(f"{shape_hint} contains values outside {self}")
        return arr

    def random_elements(self, rng, shape=None) -> np.ndarray:
        return rng.integers(0, self.q, size=shape, dtype=np.int64)

    def random_nonzero(self, rng, shape=None) -> np.ndarray:
        return rng.integers(1, self.q, size=shape, dtype=np.int64)

    # ---- derived arithmetic (subclasses provide add/neg/mul/inv/pow/...)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def dot(self, a, b) -> int:
        return int(self.sum(self.mul(a, b)))

    def matmul(self, A, B):
        """Matrix product over the field (numpy matmul shape rules)."""
        A_ = np.asarray(A, dtype=np.int64)
        B_ = np.asarray(B, dtype=np.int64)
        a1, b1 = A_.ndim == 1, B_.ndim == 1
        A2 = A_[None, :] if a1 else A_
        B2 = B_[:, None] if b1 else B_
        if A2.shape[1] != B2.shape[0]:
            raise FieldError(f"matmul shape mismatch {A2.shape} x {B2.shape}")
        C = self._matmul2d(np.ascontiguousarray(A2), np.ascontiguousarray(B2))
        if a1 and b1:
            return int(C[0, 0])
        if a1:
            return C[0]
        if b1:
            return C[:, 0]
        return C

    # ---- multiplicative structure

    def element_order(self, x) -> int:
        """Multiplicative order, by factoring q-1 and stripping primes."""
        x = int(x)
        if not 0 < x < self.q:
            raise FieldError(f"order undefined for {x} in {self}")
        order = self.q - 1
        for f in ntheory.factorize(order):
            while order % f == 0 and self.pow(x, order // f) == 1:
                order //= f
        return order

    def find_element_of_order(self, n: int) -> int:
        """Smallest element (canonical enumeration order) of order exactly n."""
        if n < 1:
            raise FieldError("order must be positive")
        if (self.q - 1) % n != 0:
            raise FieldError(f"{self} has no element of order {n} ({n} does not divide q-1)")
        cached = self._order_cache.get(n)
        if cached is not None:
            return cached
        prime_factors = list(ntheory.factorize(n))
        for x in range(1, self.q):
            if self.pow(x, n) != 1:
                continue
            if all(self.pow(x, n // f) != 1 for f in prime_factors):
                self._order_cache[n] = x
                return x
        raise FieldError(f"no element of order {n} found in {self}")  # unreachable


# ---------------------------------------------------------------------------


class PrimeField(Field):
    """GF(p): residues mod a prime p."""

    def __init__(self, p: int):
        if not ntheory.is_prime(p):
            raise FieldError(f"characteristic must be prime, got {p}")
        self.p = p
        self.s = 1
        self.q = p
        self.modulus = None
        self._order_cache: dict[int, int] = {}
        # matmul accumulates products in int64
        self._max_inner = (2**63 - 1) // ((p - 1) ** 2) if p > 1 else 2**62

    # elementwise ops accept ints or int64 arrays, broadcasting like numpy

    def _ret(self, out, scalar):
        return int(out) if scalar else out

    def add(self, a, b):
        scalar = np.isscalar(a) and np.isscalar(b)
        return self._ret((np.asarray(a) + np.asarray(b)) % self.p, scalar)

    def neg(self, a):
        scalar = np.isscalar(a)
        return self._ret((-np.asarray(a)) % self.p, scalar)

    def mul(self, a, b):
        scalar = np.isscalar(a) and np.isscalar(b)
        return self._ret(np.asarray(a) * np.asarray(b) % self.p, scalar)

    def inv(self, a):
        if np.isscalar(a):
            if int(a) % self.p == 0:
                raise FieldError("division by zero")
            return pow(int(a), -1, self.p)
        arr = np.asarray(a)
        if np.any(arr % self.p == 0):
            raise FieldError("division by zero")
        return self.pow(arr, self.p - 2)

    def pow(self, a, e):
        """Elementwise power with integer exponent; 0**0 == 1."""
        e = int(e)
        scalar = np.isscalar(a)
        if scalar:
            if e < 0:
                return pow(self.inv(int(a)), -e, self.p)
            return pow(int(a), e, self.p)
        arr = np.asarray(a, dtype=np.int64)
        if e < 0:
            arr = np.asarray(self.inv(arr), dtype=np.int64)
            e = -e
        if e == 0:
            return np.ones_like(arr)
        zero = arr == 0
        ee = e % (self.p - 1)
        out = np.ones_like(arr)
        if ee:
            base = arr.copy()
            while ee:
                if ee & 1:
                    out = out * base % self.p
                base = base * base % self.p
                ee >>= 1
        out[zero] = 0
        return out

    def sum(self, a, axis=None):
        return np.sum(np.asarray(a, dtype=np.int64), axis=axis) % self.p

    def _matmul2d(self, A, B):
        k = A.shape[1]
        if k <= self._max_inner:
            if backend.USE_NUMBA:
                return kernels.matmul_mod(A, B, self.p)
            return A @ B % self.p
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        step = max(1, self._max_inner)
        for lo in range(0, k, step):
            out = (out + A[:, lo : lo + step] @ B[lo : lo + step]) % self.p
        return out

    def coeffs(self, x):
        """Big-endian coefficient view: a tuple for a scalar, an array
        with a trailing length-1 axis for array input."""
        if np.isscalar(x):
            return (int(x),)
        return self.validate(x, "element")[..., None]

    def from_coeffs(self, coeffs):
        arr = np.asarray(coeffs, dtype=np.int64)
        if arr.ndim == 0 or arr.shape[-1] != 1:
            raise FieldError("prime-field elements have a single coefficient")
        out = arr[..., 0] % self.p
        return int(out) if out.ndim == 0 else out


# ---------------------------------------------------------------------------
# polynomial helpers for extension-field construction (little-endian lists)


def _poly_divmod(num, den, p):
    """Divide coefficient lists (little-endian) over GF(p); den monic-led."""
    num = list(num)
    dn = len(den) - 1
    while len(den) > 1 and den[-1] == 0:
        raise ValueError("denominator must have nonzero leading coefficient")
    lead_inv = pow(den[-1], -1, p)
    quot = [0] * max(1, len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k] % p
        if c:
            f = c * lead_inv % p
            quot[k - dn] = f
            for i, d in enumerate(den):
                num[k - dn + i] = (num[k - dn + i] - f * d) % p
    rem = [c % p for c in num[:dn]] or [0]
    return quot, rem


def _poly_is_irreducible(coeffs_le, p):
    """Trial division by all monic polynomials of degree <= deg/2."""
    s = len(coeffs_le) - 1
    if s < 1 or coeffs_le[-1] % p != 1:
        return False
    if coeffs_le[0] % p == 0:
        return s == 1  # divisible by x unless it *is* degree-1
    for d in range(1, s // 2 + 1):
        for enc in range(p**d):
            den = [(enc // p**i) % p for i in range(d)] + [1]
            _, rem = _poly_divmod(coeffs_le, den, p)
            if all(c == 0 for c in rem):
                return False
    return True


def _search_modulus(p, s):
    """Lexicographically smallest irreducible monic polynomial of degree s."""
    for enc in range(p**s):
        low = [(enc // p ** (s - 1 - i)) % p for i in range(s)]  # c_{s-1}..c_0
        coeffs_le = low[::-1] + [1]
        if _poly_is_irreducible(coeffs_le, p):
            return tuple([1] + low)
    raise FieldError(f"no irreducible polynomial of degree {s} over GF({p})")  # unreachable


class ExtensionField(Field):
    """GF(p^s) with a monic irreducible modulus of degree s."""

    def __init__(self, p: int, s: int, modulus=None):
        if not ntheory.is_prime(p):
            raise FieldError(f"characteristic must be prime, got {p}")
        if s < 2:
            raise FieldError("extension degree must be at least 2")
        q = p**s
        if q > _TABLE_LIMIT:
            raise FieldError(
                f"GF({p}^{s}) has order {q} > {_TABLE_LIMIT}; too large to instantiate"
            )
        self.p, self.s, self.q = p, s, q
        if modulus is None:
            self.modulus = _search_modulus(p, s)
        else:
            coeffs = tuple(int(c) % p for c in modulus)
            if len(coeffs) != s + 1:
                raise FieldError(f"modulus must have degree {s} ({s + 1} coefficients)")
            if coeffs[0] != 1:
                raise FieldError("modulus must be monic")
            if not _poly_is_irreducible(list(coeffs[::-1]), p):
                raise FieldError(f"modulus {coeffs} is reducible over GF({p})")
            self.modulus = coeffs
        self._order_cache = {}
        self._pow_p = p ** np.arange(s, dtype=np.int64)
        self._mod_le = list(self.modulus[::-1])  # little-endian incl. leading 1
        if p == 2:
            self._mod_mask = sum(c << i for i, c in enumerate(self._mod_le))
        self._build_tables()

    # ---- scalar polynomial arithmetic on encoded ints (construction only)

    def _enc(self, digits_le):
        v = 0
        for d in reversed(digits_le):
            v = v * self.p + d
        return v

    def _dec(self, v):
        return [(v // int(w)) % self.p for w in self._pow_p]

    def _smul_scalar(self, a: int, b: int) -> int:
        p, s = self.p, self.s
        if p == 2:
            res = 0
            mask = self._mod_mask
            while b:
                if b & 1:
                    res ^= a
                b >>= 1
                a <<= 1
                if (a >> s) & 1:
                    a ^= mask
            return res
        da, db = self._dec(a), self._dec(b)
        prod = [0] * (2 * s - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        for k in range(2 * s - 2, s - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i in range(s):
                    prod[k - s + i] = (prod[k - s + i] - c * self._mod_le[i]) % p
        return self._enc(prod[:s])

    def _spow_scalar(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._smul_scalar(r, a)
            a = self._smul_scalar(a, a)
            e >>= 1
        return r

    def _build_tables(self):
        q = self.q
        factors = list(ntheory.factorize(q - 1))
        gen = None
        for cand in range(2, q):
            if all(self._spow_scalar(cand, (q - 1) // f) != 1 for f in factors):
                gen = cand
                break
        if gen is None:
            raise FieldError(f"no multiplicative generator found for {self}")  # unreachable
        exp = np.empty(q - 1, dtype=np.int64)
        cur = 1
        for i in range(q - 1):
            exp[i] = cur
            cur = self._smul_scalar(cur, gen)
        if cur != 1:
            raise FieldError(f"generator cycle failed to close in {self}")  # unreachable
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        if np.any(log[1:] < 0):
            raise FieldError(f"exp table is not a bijection in {self}")  # unreachable
        self.generator = int(gen)
        self._exp = exp
        self._log = log

    # ---- digit helpers (vectorized)

    def _digits(self, a):
        return np.asarray(a, dtype=np.int64)[..., None] // self._pow_p % self.p

    def _undigits(self, d):
        return d @ self._pow_p

    # ---- elementwise arithmetic

    def _ret(self, out, scalar):
        return int(out) if scalar else out

    def add(self, a, b):
        scalar = np.isscalar(a) and np.isscalar(b)
        if self.p == 2:
            return self._ret(np.asarray(a) ^ np.asarray(b), scalar)
        out = self._undigits((self._digits(a) + self._digits(b)) % self.p)
        return self._ret(out, scalar)

    def neg(self, a):
        scalar = np.isscalar(a)
        if self.p == 2:
            return int(a) if scalar else np.array(a, dtype=np.int64)
        return self._ret(self._undigits((-self._digits(a)) % self.p), scalar)

    def mul(self, a, b):
        scalar = np.isscalar(a) and np.isscalar(b)
        la = self._log[np.asarray(a, dtype=np.int64)]
        lb = self._log[np.asarray(b, dtype=np.int64)]
        out = self._exp[(la + lb) % (self.q - 1)]
        out = np.where((la < 0) | (lb < 0), 0, out)
        return self._ret(out, scalar)

    def inv(self, a):
        scalar = np.isscalar(a)
        la = self._log[np.asarray(a, dtype=np.int64)]
        if np.any(la < 0):
            raise FieldError("division by zero")
        return self._ret(self._exp[(self.q - 1 - la) % (self.q - 1)], scalar)

    def pow(self, a, e):
        """Elementwise power with integer exponent; 0**0 == 1."""
        e = int(e)
        scalar = np.isscalar(a)
        arr = np.asarray(a, dtype=np.int64)
        if e < 0:
            arr = np.asarray(self.inv(arr), dtype=np.int64)
            e = -e
        if e == 0:
            out = np.ones_like(arr)
            return self._ret(out, scalar)
        la = self._log[arr]
        out = self._exp[la % (self.q - 1) * (e % (self.q - 1)) % (self.q - 1)]
        out = np.where(la < 0, 0, out)
        return self._ret(out, scalar)

    def sum(self, a, axis=None):
        arr = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            if axis is None:
                return int(np.bitwise_xor.reduce(arr, axis=None))
            return np.bitwise_xor.reduce(arr, axis=axis)
        if axis is None:
            d = self._digits(arr.reshape(-1)).sum(axis=0) % self.p
            return int(self._undigits(d))
        axis = axis % arr.ndim
        return self._undigits(self._digits(arr).sum(axis=axis) % self.p)

    def _matmul2d(self, A, B):
        m, k = A.shape
        n = B.shape[1]
        # chunk rows of A so the (rows, k, n) product block stays modest
        per_row = max(1, k * n * (1 if self.p == 2 else self.s))
        step = max(1, (1 << 24) // per_row)
        out = np.empty((m, n), dtype=np.int64)
        for lo in range(0, m, step):
            prod = self.mul(A[lo : lo + step, :, None], B[None, :, :])
            out[lo : lo + step] = self.sum(prod, axis=1)
        return out

    def coeffs(self, x):
        """Big-endian coefficient view: a tuple for a scalar, an array
        with a trailing length-s axis for array input."""
        if np.isscalar(x):
            return tuple(int(c) for c in self._dec(int(x))[::-1])
        return self._digits(self.validate(x, "element"))[..., ::-1]

    def from_coeffs(self, coeffs):
        arr = np.asarray(coeffs, dtype=np.int64)
        if arr.ndim == 0 or arr.shape[-1] > self.s:
            raise FieldError(f"need a trailing axis of at most {self.s} coefficients for {self}")
        arr = arr % self.p
        pad = self.s - arr.shape[-1]
        if pad:
            zeros = np.zeros(arr.shape[:-1] + (pad,), dtype=np.int64)
            arr = np.concatenate([zeros, arr], axis=-1)
        out = arr[..., ::-1] @ self._pow_p
        return int(out) if out.ndim == 0 else out


# ---------------------------------------------------------------------------


def make_field(p: int, s: int = 1, modulus=None) -> Field:
    """Construct GF(p) (s == 1) or GF(p^s) with an optional explicit modulus.

    When no modulus is given for s >= 2, the lexicographically smallest
    irreducible monic polynomial of degree s is found by exhaustive search.
    """
    if s < 1:
        raise FieldError(f"extension degree must be positive, got {s}")
    if s == 1:
        if modulus is not None:
            raise FieldError("prime fields take no modulus")
        return PrimeField(p)
    return ExtensionField(p, s, modulus)


def field_from_spec(text: str) -> Field:
    """Construct a field from its spec string ('p' or 'p^s/c_s,...,c_0')."""
    p, s, modulus = parse_field_spec(text)
    return make_field(p, s, modulus)
