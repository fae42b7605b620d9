"""Elementary number theory helpers: primality, factoring, totient, orders.

Everything here is exact integer arithmetic at desk scale.  Primality is
a deterministic Miller-Rabin with a fixed base set that is exact below
3.3e14; factoring is plain trial division.
"""

import math

import numpy as np

# Witnesses making Miller-Rabin deterministic for all n < 3.3e14.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17)
_MR_LIMIT = 330_000_000_000_000

# Trial division handles cofactors up to _FACTOR_LIMIT (sqrt fits 1e6).
_FACTOR_LIMIT = 10**12


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 3.3e14."""
    if n >= _MR_LIMIT:
        raise ValueError(f"primality test is only deterministic below {_MR_LIMIT}")
    if n < 2:
        return False
    for b in _MR_BASES:
        if n == b:
            return True
        if n % b == 0:
            return False
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {p: exponent} by trial division."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    if n > _FACTOR_LIMIT:
        raise ValueError(f"factoring beyond {_FACTOR_LIMIT} is out of scope")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        d += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def euler_phi(n: int) -> int:
    """Euler totient via the factorization of n."""
    if n < 1:
        raise ValueError("euler_phi expects a positive integer")
    phi = 1
    for p, e in factorize(n).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in (Z/n)*; requires gcd(a, n) == 1 and n >= 2."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    a %= n
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    order = euler_phi(n)
    for p in factorize(order):
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


def primes_up_to(limit: int) -> np.ndarray:
    """All primes <= limit, ascending (simple sieve)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.nonzero(sieve)[0].astype(np.int64)


def primes_in_progression(n: int, count: int, bound: int) -> list[int]:
    """First `count` primes congruent to 1 mod n, not exceeding `bound`."""
    found = []
    for candidate in range(n + 1, bound + 1, n):
        if is_prime(candidate):
            found.append(candidate)
            if len(found) >= count:
                break
    return found
