"""Exhaustive checks of the number-theoretic lemmas behind the degree results.

Each ``check_*`` function enumerates its parameter window and returns a
:class:`LemmaResult`. Floor comparisons use integer arithmetic only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

import numpy as np

from .numtheory import factorize, find_sqrt_bracket, padic_valuation, primes_upto, sqrt_floor


@dataclass
class LemmaResult:
    name: str
    checked: int = 0
    counterexamples: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _reduced(a: np.ndarray, n: int) -> np.ndarray:
    return a // np.gcd(a, n)


def check_reduced_prime_divisibility(limit: int = 300) -> LemmaResult:
    """p | a/(a,n)  iff  p**(v_p(n)+1) | a, for primes p <= limit and 1 <= a <= n <= limit."""
    res = LemmaResult("reduced_prime_divisibility")
    primes = primes_upto(limit)
    for n in range(1, limit + 1):
        a = np.arange(1, n + 1, dtype=np.int64)
        red = _reduced(a, n)
        for p in primes:
            crit = p ** (padic_valuation(p, n) + 1)
            lhs = red % p == 0
            rhs = a % crit == 0
            res.checked += n
            for bad in np.flatnonzero(lhs != rhs):
                res.counterexamples.append((p, int(a[bad]), n))
    return res


def check_reduced_divisibility_chain(limit: int = 300) -> LemmaResult:
    """a | b  implies  a/(a,n) | b/(b,n), for b <= n <= limit."""
    res = LemmaResult("reduced_divisibility_chain")
    for n in range(1, limit + 1):
        for a in range(1, n + 1):
            ra = a // gcd(a, n)
            for b in range(a, n + 1, a):
                res.checked += 1
                if (b // gcd(b, n)) % ra:
                    res.counterexamples.append((a, b, n))
    return res


def _equal_floor_pairs(n: int, limit: int) -> tuple[np.ndarray, np.ndarray]:
    """All a < b <= limit with n // a == n // b."""
    a = np.arange(1, limit + 1, dtype=np.int64)
    floors = n // a
    i, j = np.nonzero(np.triu(floors[:, None] == floors[None, :], k=1))
    return a[i], a[j]


def check_equal_floor_product(limit: int = 300) -> LemmaResult:
    """n // a == n // b with a != b implies a*b > n, for a, b, n <= limit."""
    res = LemmaResult("equal_floor_product")
    for n in range(1, limit + 1):
        a, b = _equal_floor_pairs(n, limit)
        res.checked += len(a)
        for k in np.flatnonzero(a * b <= n):
            res.counterexamples.append((int(a[k]), int(b[k]), n))
    return res


def check_floor_scaling(limit: int = 300) -> LemmaResult:
    """n // a == n // b implies n // (t a) == n // (t b), for a, b, t, n <= limit.

    Within a group of equal floors, every pair agrees iff every member agrees
    with the group's smallest member, so rows are compared against that one.
    """
    res = LemmaResult("floor_scaling")
    a = np.arange(1, limit + 1, dtype=np.int64)
    scaled = a[:, None] * a[None, :]
    for n in range(1, limit + 1):
        floors = n // a
        table = n // scaled
        _, first, group, sizes = np.unique(floors, return_index=True, return_inverse=True, return_counts=True)
        res.checked += int((sizes * (sizes - 1) // 2).sum()) * limit
        lead = first[group]
        for k in np.flatnonzero(np.any(table != table[lead], axis=1)):
            t = int(np.flatnonzero(table[k] != table[lead[k]])[0]) + 1
            res.counterexamples.append((int(lead[k]) + 1, int(k) + 1, t, n))
    return res


def _two_prime_labels(n: int, bound: int):
    """Labels a <= bound whose reduced form has exactly two distinct primes, both with
    critical powers <= n; yields (a, primes, sorted floor pair)."""
    out = []
    for a in range(1, bound + 1):
        f = factorize(a // gcd(a, n))
        if f.omega != 2:
            continue
        floors = []
        for p in f.primes:
            crit = p ** (padic_valuation(p, n) + 1)
            floors.append(n // crit)
        if min(floors) < 1:
            continue
        out.append((a, frozenset(f.primes), tuple(sorted(floors))))
    return out


def check_two_prime_power_bracket(n_max: int = 150, window: int = 4) -> LemmaResult:
    """Reduced forms p1^x p2^y and q1^z q2^w over four distinct primes whose critical powers
    share floor brackets pairwise force a > n or b > n. Searched over a, b <= window * n."""
    res = LemmaResult("two_prime_power_bracket")
    for n in range(1, n_max + 1):
        groups: dict[tuple[int, int], list] = {}
        for a, primes, floors in _two_prime_labels(n, window * n):
            groups.setdefault(floors, []).append((a, primes))
        for members in groups.values():
            for (a, pa), (b, pb) in combinations(members, 2):
                if pa & pb:
                    continue
                res.checked += 1
                if a <= n and b <= n:
                    res.counterexamples.append((a, b, n))
    return res


def check_sqrt_bracket(limit: int = 10**6) -> LemmaResult:
    """find_sqrt_bracket's postcondition for every n <= limit."""
    res = LemmaResult("sqrt_bracket")
    for n in range(1, limit + 1):
        r = sqrt_floor(n)
        j = find_sqrt_bracket(n)
        res.checked += 1
        if not (r <= j <= n and n < r * (j + 1) and r * j <= n and n < j * (j + 1)):
            res.counterexamples.append((n, j))
    return res


def run_all(limit: int = 300, bracket_n_max: int = 150, sqrt_limit: int = 10**6) -> list[LemmaResult]:
    return [
        check_reduced_prime_divisibility(limit),
        check_reduced_divisibility_chain(limit),
        check_equal_floor_product(limit),
        check_floor_scaling(limit),
        check_two_prime_power_bracket(bracket_n_max),
        check_sqrt_bracket(sqrt_limit),
    ]
