"""Maximal Diophantine graphs D_n and maximal prime graphs R_n.

Adjacency is a rule on labels, never a stored matrix, so the closed-form
counts work for large ``n``. Quadratic materialization only happens in the
``*_bruteforce`` oracles and in :func:`adjacency_matrix`.
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd

import numpy as np

from .numtheory import (
    CriticalPower,
    binom2,
    distinct_primes,
    is_prime,
    padic_valuation,
    prime_pi,
    primes_upto,
    reduced_label,
)

log = logging.getLogger(__name__)

FORMULA_MAX_N = 10**7
# Above this order the pair-scan oracles work row by row instead of on a cached gcd table.
_GCD_TABLE_MAX = 4096


class Kind(str, enum.Enum):
    DIOPHANTINE = "dio"
    PRIME = "prime"

    @classmethod
    def parse(cls, value) -> "Kind":
        if isinstance(value, cls):
            return value
        aliases = {"dio": cls.DIOPHANTINE, "diophantine": cls.DIOPHANTINE, "prime": cls.PRIME}
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise ValueError(f"unknown kind {value!r}") from None


@dataclass(frozen=True)
class MaximalGraphSpec:
    """The maximal graph of order ``n`` on labels 1..n.

    For ``Kind.PRIME`` every valuation is forced to zero, so each critical
    power is the prime itself.
    """

    n: int
    kind: Kind = Kind.DIOPHANTINE

    def __post_init__(self):
        if int(self.n) < 1:
            raise ValueError(f"order must be >= 1, got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "kind", Kind.parse(self.kind))

    @cached_property
    def critical_powers(self) -> tuple[CriticalPower, ...]:
        return tuple(self.critical(p) for p in primes_upto(self.n - 1))

    def critical(self, p: int) -> CriticalPower:
        if self.kind is Kind.PRIME:
            return CriticalPower(p, 0)
        return CriticalPower(p, padic_valuation(p, self.n))

    def power(self, p: int) -> int:
        return self.critical(p).power

    @property
    def is_prime_kind(self) -> bool:
        return self.kind is Kind.PRIME


def D(n: int) -> MaximalGraphSpec:
    return MaximalGraphSpec(n, Kind.DIOPHANTINE)


def R(n: int) -> MaximalGraphSpec:
    return MaximalGraphSpec(n, Kind.PRIME)


def _check_label(a: int, n: int) -> int:
    a = int(a)
    if not 1 <= a <= n:
        raise ValueError(f"label {a} outside [1, {n}]")
    return a


def _check_pair(a, b, spec):
    a, b = _check_label(a, spec.n), _check_label(b, spec.n)
    if a == b:
        raise ValueError(f"no loops: labels {a} and {b} coincide")
    return a, b


def gcd_allows(g: int, n: int, kind: Kind) -> bool:
    return g == 1 if kind is Kind.PRIME else n % g == 0


def is_adjacent(a: int, b: int, spec: MaximalGraphSpec) -> bool:
    a, b = _check_pair(a, b, spec)
    return gcd_allows(gcd(a, b), spec.n, spec.kind)


def nonadjacency_witness(a: int, b: int, spec: MaximalGraphSpec) -> int | None:
    """Smallest prime whose critical power divides both labels, or None if they are adjacent."""
    a, b = _check_pair(a, b, spec)
    g = gcd(a, b)
    for p in distinct_primes(g) if g > 1 else ():
        if g % spec.power(p) == 0:
            return p
    return None


def _ie_terms(powers: list[int], limit: int):
    """Yield (sign, product) for every nonempty subset of ``powers`` with product <= limit.

    ``powers`` must be sorted ascending; a branch stops as soon as the next
    factor pushes the product past ``limit``.
    """
    stack = [(0, 1, 0)]
    while stack:
        start, prod, size = stack.pop()
        for i in range(start, len(powers)):
            nxt = prod * powers[i]
            if nxt > limit:
                break
            sign = -1 if size % 2 == 0 else 1
            yield sign, nxt
            stack.append((i + 1, nxt, size + 1))


def edge_count_formula(spec: MaximalGraphSpec) -> int:
    """Inclusion-exclusion edge count over critical prime powers.

    Only subsets whose product is at most n/2 contribute; the others have
    at most one multiple in 1..n and a vanishing C(., 2) term.
    """
    n = spec.n
    if n > FORMULA_MAX_N:
        raise ValueError(f"n={n} exceeds the formula cap {FORMULA_MAX_N}")
    half = n // 2
    powers = sorted(P for p in primes_upto(half) if (P := spec.power(p)) <= half)
    total = binom2(n)
    for sign, prod in _ie_terms(powers, half):
        total += sign * binom2(n // prod)
    return total


def degree_formula(a: int, spec: MaximalGraphSpec) -> int:
    """Degree of label ``a`` from the distinct primes of its reduced label."""
    n = spec.n
    a = _check_label(a, n)
    core = a if spec.is_prime_kind else reduced_label(a, n)
    if core == 1:
        return n - 1
    powers = sorted(spec.power(p) for p in distinct_primes(core))
    # Union of the multiples of each critical power; u itself is in it.
    union = 0
    for sign, prod in _ie_terms(powers, n):
        union -= sign * (n // prod)
    return n - union


@lru_cache(maxsize=4)
def _gcd_table(size: int) -> np.ndarray:
    r = np.arange(1, size + 1, dtype=np.int32)
    table = np.gcd(r[:, None], r[None, :])
    table.setflags(write=False)
    return table


def _gcd_block(n: int) -> np.ndarray:
    if n <= _GCD_TABLE_MAX:
        size = 1 << max(6, (n - 1).bit_length())
        return _gcd_table(size)[:n, :n]
    r = np.arange(1, n + 1, dtype=np.int64)
    return np.gcd(r[:, None], r[None, :])


def adjacency_matrix(spec: MaximalGraphSpec) -> np.ndarray:
    """Boolean (n, n) matrix; entry [a-1, b-1] is the adjacency of labels a, b."""
    g = _gcd_block(spec.n)
    mat = (g == 1) if spec.is_prime_kind else (spec.n % g == 0)
    np.fill_diagonal(mat, False)
    return mat


def edge_count_bruteforce(spec: MaximalGraphSpec) -> int:
    """Count adjacent pairs a < b by scanning every pair."""
    n = spec.n
    if n <= _GCD_TABLE_MAX:
        return int(adjacency_matrix(spec).sum()) // 2
    total = 0
    for a in range(1, n):
        g = np.gcd(a, np.arange(a + 1, n + 1, dtype=np.int64))
        total += int(np.count_nonzero(g == 1 if spec.is_prime_kind else n % g == 0))
    return total


def degree_bruteforce(a: int, spec: MaximalGraphSpec) -> int:
    n = spec.n
    a = _check_label(a, n)
    g = np.gcd(a, np.arange(1, n + 1, dtype=np.int64))
    ok = (g == 1) if spec.is_prime_kind else (n % g == 0)
    return int(np.count_nonzero(ok)) - int(ok[a - 1])


def neighbours(a: int, spec: MaximalGraphSpec) -> set[int]:
    a = _check_label(a, spec.n)
    return {b for b in range(1, spec.n + 1) if b != a and gcd_allows(gcd(a, b), spec.n, spec.kind)}


def full_degree_labels(spec: MaximalGraphSpec) -> list[int]:
    """Labels of degree n-1: divisors of n, or a critical prime power strictly between n/2 and n.

    For the prime kind the divisor case reduces to label 1 and the window
    admits any prime p with n/2 < p <= n.
    """
    n = spec.n
    if spec.is_prime_kind:
        return [1] + [p for p in primes_upto(n) if 2 * p > n]
    divisors = {a for a in range(1, n + 1) if n % a == 0}
    window = set()
    for p in primes_upto(n - 1):
        P = spec.power(p)
        if n < 2 * P and P < n:
            window.add(P)
    both = divisors & window
    if both:
        log.warning("labels %s satisfy both full-degree conditions for n=%d", sorted(both), n)
    return sorted(divisors | window)


@dataclass(frozen=True)
class DegreeReport:
    n: int
    degrees: np.ndarray  # degrees[a] for label a; index 0 unused
    classes: dict[int, list[int]] = field(repr=False)
    full_degree_labels: list[int] = field(repr=False)


def degree_classes(spec: MaximalGraphSpec, method: str = "formula") -> DegreeReport:
    n = spec.n
    if method == "formula":
        degs = [0] + [degree_formula(a, spec) for a in range(1, n + 1)]
        degrees = np.array(degs, dtype=np.int64)
    elif method == "brute":
        degrees = np.zeros(n + 1, dtype=np.int64)
        degrees[1:] = adjacency_matrix(spec).sum(axis=1)
    else:
        raise ValueError(f"unknown method {method!r}")
    classes: dict[int, list[int]] = {}
    for a in range(1, n + 1):
        classes.setdefault(int(degrees[a]), []).append(a)
    classes = dict(sorted(classes.items(), reverse=True))
    full = classes.get(n - 1, []) if n >= 2 else [1]
    return DegreeReport(n, degrees, classes, list(full))


def dn_equals_rn(n: int) -> bool:
    """Whether D_n and R_n have the same edge set under the identity labelling."""
    n = int(n)
    if n < 2:
        raise ValueError("dn_equals_rn needs n >= 2")
    return bool(np.array_equal(adjacency_matrix(D(n)), adjacency_matrix(R(n))))


def seoud_youssef_bound(n: int) -> int:
    """pi(n) + pi(n // 2) + 1: more full-degree vertices than this rules out a prime labelling."""
    return prime_pi(n) + prime_pi(int(n) // 2) + 1


def deficient_pairs(spec: MaximalGraphSpec) -> list[tuple[int, int]]:
    """All nonadjacent label pairs a < b."""
    mat = adjacency_matrix(spec)
    a, b = np.nonzero(np.triu(~mat, k=1))
    return [(int(x) + 1, int(y) + 1) for x, y in zip(a, b)]


__all__ = [
    "D",
    "DegreeReport",
    "FORMULA_MAX_N",
    "Kind",
    "MaximalGraphSpec",
    "R",
    "adjacency_matrix",
    "deficient_pairs",
    "degree_bruteforce",
    "degree_classes",
    "degree_formula",
    "dn_equals_rn",
    "edge_count_bruteforce",
    "edge_count_formula",
    "full_degree_labels",
    "gcd_allows",
    "is_adjacent",
    "is_prime",
    "neighbours",
    "nonadjacency_witness",
    "seoud_youssef_bound",
]
