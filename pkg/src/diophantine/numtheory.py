"""Integer kernel: sieves, factorization, p-adic valuations and critical prime powers."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

import numpy as np

# Largest value served from the smallest-prime-factor table; beyond it we
# fall back to trial division by sieved primes.
SIEVE_LIMIT = 10**7


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)) or any(e < 1 for _, e in self.factors):
            raise ValueError(f"malformed factorization {self.factors}")
        prod = 1
        for p, e in self.factors:
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors {self.factors} do not multiply to {self.value}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def omega(self) -> int:
        """Number of distinct prime factors."""
        return len(self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0


@dataclass(frozen=True)
class CriticalPower:
    """The smallest power of ``prime`` that does not divide ``n``."""

    prime: int
    valuation: int

    @property
    def successor(self) -> int:
        return self.valuation + 1

    @property
    def power(self) -> int:
        return self.prime**self.successor


class Sieve:
    """Smallest-prime-factor table for 0..limit. Read-only after construction."""

    def __init__(self, limit: int):
        limit = max(int(limit), 2)
        spf = np.zeros(limit + 1, dtype=np.int32)
        for p in range(2, isqrt(limit) + 1):
            if spf[p] == 0:
                block = spf[p * p :: p]
                block[block == 0] = p
        rest = np.flatnonzero(spf == 0)
        spf[rest] = rest
        spf[:2] = 0
        spf.setflags(write=False)
        self.limit = limit
        self.spf = spf
        primes = np.flatnonzero(spf[2:] == np.arange(2, limit + 1)) + 2
        primes.setflags(write=False)
        self.primes = primes

    def is_prime(self, n: int) -> bool:
        return n >= 2 and int(self.spf[n]) == n

    def factor(self, n: int) -> list[tuple[int, int]]:
        out: list[tuple[int, int]] = []
        spf = self.spf
        while n > 1:
            p = int(spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out


@lru_cache(maxsize=None)
def _sieve_bucket(bits: int) -> Sieve:
    return Sieve(1 << bits)


def sieve(limit: int) -> Sieve:
    """Return a shared sieve covering at least ``limit`` (sizes are rounded up to powers of two)."""
    bits = max(10, int(limit).bit_length())
    return _sieve_bucket(bits)


def _check_positive(n, name="n") -> int:
    n = int(n)
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")
    return n


def is_prime(n: int) -> bool:
    n = int(n)
    if n < 2:
        return False
    if n <= SIEVE_LIMIT:
        return sieve(n).is_prime(n)
    return factorize(n).factors == ((n, 1),)


def factorize(n: int) -> Factorization:
    """Prime factorization of ``n`` with primes in increasing order.

    >>> factorize(12).factors
    ((2, 2), (3, 1))
    """
    n = _check_positive(n)
    if n <= SIEVE_LIMIT:
        return Factorization(n, tuple(sieve(n).factor(n)))
    factors = []
    m = n
    for p in sieve(min(isqrt(n), SIEVE_LIMIT)).primes:
        p = int(p)
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    if m > 1:
        if m > SIEVE_LIMIT**2:
            raise ValueError(f"{n} is beyond the supported factoring range")
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def distinct_primes(n: int) -> tuple[int, ...]:
    return factorize(n).primes


def omega(n: int) -> int:
    return factorize(n).omega


def is_prime_power(n: int) -> bool:
    """True for p**k with k >= 1. 1 is not a prime power."""
    return int(n) > 1 and factorize(n).omega == 1


def padic_valuation(p: int, n: int) -> int:
    """Exponent t with p**t | n and p**(t+1) not dividing n."""
    p = int(p)
    n = _check_positive(n)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    t = 0
    while n % p == 0:
        n //= p
        t += 1
    return t


def critical_power(p: int, n: int) -> CriticalPower:
    return CriticalPower(int(p), padic_valuation(p, n))


def reduced_label(a: int, n: int) -> int:
    """a / gcd(a, n) for a label 1 <= a <= n."""
    a, n = int(a), _check_positive(n)
    if not 1 <= a <= n:
        raise ValueError(f"label {a} outside [1, {n}]")
    return a // gcd(a, n)


def multiples_count(a: int, n: int) -> int:
    """Size of the set of multiples of a not exceeding n."""
    return _check_positive(n) // _check_positive(a, "a")


def sqrt_floor(n: int) -> int:
    r = isqrt(n)
    assert r * r <= n < (r + 1) * (r + 1)
    return r


def find_sqrt_bracket(n: int) -> int:
    """Smallest j >= floor(sqrt(n)) with n/(j+1) < floor(sqrt(n)) <= n/j and n/j - n/(j+1) < 1.

    All comparisons are cross-multiplied integers.
    """
    n = _check_positive(n)
    r = sqrt_floor(n)
    for j in range(r, n + 1):
        # n/(j+1) < r  <=>  n < r(j+1);  r <= n/j  <=>  rj <= n;  n/(j(j+1)) < 1  <=>  n < j(j+1)
        if n < r * (j + 1) and r * j <= n and n < j * (j + 1):
            return j
    raise AssertionError(f"no bracket found for n={n}")


def primes_upto(n: int) -> list[int]:
    n = int(n)
    if n < 2:
        return []
    primes = sieve(n).primes
    return primes[: np.searchsorted(primes, n, side="right")].tolist()


def prime_pi(n: int) -> int:
    n = int(n)
    if n < 2:
        return 0
    return int(np.searchsorted(sieve(n).primes, n, side="right"))


def binom2(m: int) -> int:
    """C(m, 2), taken as 0 when m < 2."""
    return m * (m - 1) // 2 if m >= 2 else 0
