"""Parameter design: stretch a base rate to a target error budget, list
fields supporting the resulting length, and bound the failure rate.

Given a base shape (n0, r0) and a target number of correctable errors
t, the smallest multiplier m with floor((m*n0 - m*r0)/2) >= t is
m = ceil(2t/(n0-r0)); the design is then (n = m*n0, r = m*r0) with
distance n - r + 1.  A Fourier construction of length n needs a field
GF(q) with n | q - 1, so candidate fields are:

  * prime fields GF(p) with p = 1 (mod n), and
  * extension fields GF(p^s) with s the multiplicative order of p mod n
    (the least s making p^s = 1 (mod n)), for small characteristics p.

A binomial tail estimate bounds the probability that a symbol channel
with error rate eps produces more than t errors in n positions.
"""

import math
from dataclasses import dataclass

from .ntheory import is_prime, multiplicative_order, primes_in_progression, primes_up_to

_MAX_Q = 1 << 32  # candidates larger than this are not worth listing


class DesignError(ValueError):
    """Unsatisfiable or out-of-regime design request."""


@dataclass(frozen=True)
class FieldCandidate:
    """A field GF(p^s) = GF(q) whose multiplicative group has order
    divisible by the design length."""

    p: int
    s: int
    q: int

    @property
    def is_prime_field(self) -> bool:
        return self.s == 1

    @property
    def spec(self) -> str:
        return str(self.p) if self.s == 1 else f"{self.p}^{self.s}"

    def __str__(self) -> str:
        return f"GF({self.p})" if self.s == 1 else f"GF({self.p}^{self.s})"


@dataclass(frozen=True)
class CodeDesign:
    target_errors: int
    base_length: int
    base_dim: int
    multiplier: int
    n: int
    r: int
    distance: int
    candidates: tuple[FieldCandidate, ...]

    @property
    def t(self) -> int:
        return (self.n - self.r) // 2

    @property
    def rate(self) -> float:
        return self.r / self.n

    def smallest_field(self) -> FieldCandidate:
        return self.candidates[0]

    def smallest_extension_field(self) -> FieldCandidate:
        """First candidate that is a proper extension (s >= 2) — the
        cheapest small-characteristic arithmetic for this length."""
        for c in self.candidates:
            if c.s >= 2:
                return c
        raise DesignError("no extension-field candidate within the size limits")


def field_candidates(
    n: int, max_char: int = 64, prime_count: int = 8, max_q: int = _MAX_Q
) -> tuple[FieldCandidate, ...]:
    """Fields GF(p^s) with n | p^s - 1, sorted by ascending (q, p).

    Small characteristics p <= max_char get their minimal extension
    degree; on top of that the first prime_count primes p = 1 (mod n)
    are included as prime fields.  Every listed q satisfies q <= max_q.
    """
    if n < 2:
        raise DesignError("candidate search needs a length of at least 2")
    found: dict[int, FieldCandidate] = {}
    for p in map(int, primes_up_to(max_char)):
        if n % p == 0:
            continue  # the characteristic must not divide the length
        s = multiplicative_order(p, n)
        q = p**s
        if q <= max_q and (q not in found or p < found[q].p):
            found[q] = FieldCandidate(p=p, s=s, q=q)
    for p in primes_in_progression(n, count=prime_count, bound=max_q):
        found.setdefault(int(p), FieldCandidate(p=int(p), s=1, q=int(p)))
    if not found:
        raise DesignError(f"no field with q <= {max_q} supports length {n}")
    return tuple(sorted(found.values(), key=lambda c: (c.q, c.p)))


def design_code(
    target_errors: int,
    base_length: int,
    base_dim: int,
    max_char: int = 64,
    prime_count: int = 8,
) -> CodeDesign:
    """Smallest (n, r) of shape (m*n0, m*r0) correcting target_errors."""
    if target_errors < 1:
        raise DesignError("target error count must be at least 1")
    if not (0 < base_dim < base_length):
        raise DesignError("need 0 < base_dim < base_length")
    redundancy = base_length - base_dim
    m = -(-2 * target_errors // redundancy)  # ceil
    n = m * base_length
    r = m * base_dim
    return CodeDesign(
        target_errors=target_errors,
        base_length=base_length,
        base_dim=base_dim,
        multiplier=m,
        n=n,
        r=r,
        distance=n - r + 1,
        candidates=field_candidates(n, max_char=max_char, prime_count=prime_count),
    )


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FailureBound:
    """Upper bound on P[more than t symbol errors in n transmissions]."""

    n: int
    r: int
    t: int
    symbol_error_rate: float
    delta: float
    bound: float
    high_error_regime: bool


def failure_bound(n: int, r: int, symbol_error_rate: float) -> FailureBound:
    """Multiplicative binomial tail bound for exceeding the capability.

    With mean mu = n*eps errors expected and t = floor((n-r)/2)
    correctable, set delta = (t+1)/mu - 1 so that (1+delta)*mu = t+1;
    then P[errors > t] <= exp(-delta^2 * mu / (2 + delta)).  Requires
    mu < t+1 (delta > 0), i.e. the channel must sit below the code's
    capability; otherwise the request is out of regime.  The
    high_error_regime flag marks rates r/n above 1 - 2*eps, where the
    expected error count already exceeds the designed capability margin.
    """
    if not (0 < symbol_error_rate < 1):
        raise DesignError("symbol error rate must be in (0, 1)")
    if not (0 < r < n):
        raise DesignError("need 0 < r < n")
    t = (n - r) // 2
    mu = n * symbol_error_rate
    delta = (t + 1) / mu - 1
    if delta <= 0:
        raise DesignError(
            f"expected error count {mu:.3g} is not below t+1 = {t + 1}; "
            "the tail bound is vacuous in this regime"
        )
    bound = math.exp(-(delta**2) * mu / (2 + delta))
    return FailureBound(
        n=n,
        r=r,
        t=t,
        symbol_error_rate=symbol_error_rate,
        delta=delta,
        bound=bound,
        high_error_regime=(r / n > 1 - 2 * symbol_error_rate),
    )
