"""Exhaustive checks of the equal-degree and full-degree results on D_n.

Every check compares a theorem's statement against degrees and
neighbourhoods read off the materialized adjacency matrix, never against
the closed-form degree formula.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

import networkx as nx
import numpy as np

from .maximal import D, adjacency_matrix, deficient_pairs, full_degree_labels, seoud_youssef_bound
from .numtheory import factorize, is_prime_power, padic_valuation, prime_pi

THEOREM_IDS = (
    "EQ_PRIME_POWERS",
    "EQ_SAME_PRIME",
    "EQ_MULTIPLE",
    "EQ_OMEGA",
    "EQ_CONVERSE",
    "NBHD_NESTING",
    "DEFICIENT_HAS_CRITICAL",
    "COROLLARY_NONPRIME",
)


@dataclass
class TheoremVerdict:
    theorem_id: str
    n: int
    pairs_checked: int = 0
    counterexamples: list[tuple[int, int, str]] = field(default_factory=list)
    instances: list[tuple[int, int]] | None = None
    notes: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


class _Context:
    """Per-order tables shared by all checks."""

    def __init__(self, n: int):
        self.n = n
        self.spec = D(n)
        self.adj = adjacency_matrix(self.spec)
        self.deg = np.zeros(n + 1, dtype=np.int64)
        self.deg[1:] = self.adj.sum(axis=1)
        self.fact = [None] + [factorize(a) for a in range(1, n + 1)]
        self.reduced = [0] + [a // gcd(a, n) for a in range(1, n + 1)]
        self.reduced_primes = [frozenset()] + [frozenset(factorize(m).primes) for m in self.reduced[1:]]
        self._power: dict[int, int] = {}

    def power(self, p: int) -> int:
        if p not in self._power:
            self._power[p] = p ** (padic_valuation(p, self.n) + 1)
        return self._power[p]

    def successor(self, p: int) -> int:
        return padic_valuation(p, self.n) + 1

    def floor(self, p: int) -> int:
        return self.n // self.power(p)

    def deficient(self, a: int) -> bool:
        return self.deg[a] < self.n - 1


@lru_cache(maxsize=2)
def _context(n: int) -> _Context:
    return _Context(n)


def _biconditional(verdict, a, b, lhs, rhs, lhs_name, rhs_name):
    verdict.pairs_checked += 1
    if lhs and not rhs:
        verdict.counterexamples.append((a, b, f"{lhs_name} but not {rhs_name}"))
    elif rhs and not lhs:
        verdict.counterexamples.append((a, b, f"{rhs_name} but not {lhs_name}"))


def _prime_power_labels(ctx):
    out = []
    for a in range(2, ctx.n + 1):
        f = ctx.fact[a]
        if f.omega == 1 and ctx.deficient(a):
            p, t = f.factors[0]
            out.append((a, p, t))
    return out


def _eq_prime_powers(ctx, verdict, same_prime: bool):
    labels = _prime_power_labels(ctx)
    for i, (a, p, t) in enumerate(labels):
        for b, q, k in labels[i + 1 :]:
            if same_prime != (p == q):
                continue
            lhs = ctx.deg[a] == ctx.deg[b]
            if same_prime:
                rhs = ctx.successor(p) <= min(t, k)
            else:
                rhs = ctx.successor(p) <= t and ctx.successor(q) <= k and ctx.floor(p) == ctx.floor(q)
            _biconditional(verdict, a, b, lhs, rhs, "equal degrees", "valuation/floor condition")


def _eq_multiple(ctx, verdict):
    n = ctx.n
    for a in range(1, n + 1):
        for b in range(2 * a, n + 1, a):
            if is_prime_power(b):
                continue
            t = b // a
            cond = True
            for p in ctx.fact[t].primes:
                s = ctx.successor(p)
                # exclusive or, as stated
                if (s <= ctx.fact[a].exponent(p)) == (s > ctx.fact[b].exponent(p)):
                    cond = False
                    break
            lhs = ctx.deg[a] == ctx.deg[b]
            _biconditional(verdict, a, b, lhs, cond, "equal degrees", "per-prime valuation condition")


def eq_omega_hypothesis(a: int, b: int, n: int) -> bool:
    """Hypothesis of the omega criterion for labels a (u) and b (v) in D_n."""
    ctx = _context(n)
    return _omega_hyp(ctx, a, b)


def _omega_hyp(ctx, a, b):
    if not (ctx.deficient(a) and ctx.deficient(b)):
        return False
    pa, pb = ctx.reduced_primes[a], ctx.reduced_primes[b]
    if len(pa) != len(pb):
        return False
    floors_b = {ctx.floor(q) for q in pb}
    return all(ctx.floor(p) in floors_b for p in pa)


def _eq_omega(ctx, verdict, record):
    n = ctx.n
    labels = [a for a in range(1, n + 1) if ctx.deficient(a)]
    floors = {a: frozenset(ctx.floor(p) for p in ctx.reduced_primes[a]) for a in labels}
    for a in labels:
        wa, fa = len(ctx.reduced_primes[a]), floors[a]
        for b in labels:
            if a == b or len(ctx.reduced_primes[b]) != wa or not fa <= floors[b]:
                continue
            verdict.pairs_checked += 1
            if record:
                verdict.instances.append((a, b))
            if ctx.deg[a] != ctx.deg[b]:
                verdict.counterexamples.append(
                    (a, b, f"hypothesis holds but degrees {ctx.deg[a]} != {ctx.deg[b]}")
                )


def _eq_converse(ctx, verdict):
    n = ctx.n
    for a in range(2, n + 1):
        if ctx.reduced[a] == 1:
            continue
        for b in range(2 * a, n + 1, a):
            if is_prime_power(b) or ctx.deg[a] != ctx.deg[b]:
                continue
            verdict.pairs_checked += 1
            if ctx.reduced_primes[a] != ctx.reduced_primes[b]:
                verdict.counterexamples.append(
                    (a, b, f"equal degrees but reduced primes {sorted(ctx.reduced_primes[a])} "
                           f"vs {sorted(ctx.reduced_primes[b])}")
                )


def _nbhd_nesting(ctx, verdict):
    n = ctx.n
    adj = ctx.adj
    for a in range(1, n + 1):
        for b in range(2 * a, n + 1, a):
            verdict.pairs_checked += 1
            na, nb = adj[a - 1].copy(), adj[b - 1].copy()
            na[[a - 1, b - 1]] = False
            nb[[a - 1, b - 1]] = False
            if np.any(nb & ~na):
                verdict.counterexamples.append((a, b, "N(v)-{u} not contained in N(u)-{v}"))
            elif ctx.deg[a] == ctx.deg[b] and not np.array_equal(na, nb):
                verdict.counterexamples.append((a, b, "equal degrees but neighbourhoods differ"))


def _deficient_has_critical(ctx, verdict):
    for a in range(1, ctx.n + 1):
        if not ctx.deficient(a):
            continue
        verdict.pairs_checked += 1
        if not any(a % ctx.power(p) == 0 for p in ctx.fact[a].primes):
            verdict.counterexamples.append((a, a, "deficient label without a critical prime power divisor"))


def independence_number(n: int) -> int:
    """Largest set of pairwise nonadjacent labels in D_n."""
    comp = nx.Graph()
    comp.add_nodes_from(range(1, n + 1))
    comp.add_edges_from(deficient_pairs(D(n)))
    _, size = nx.max_weight_clique(comp, weight=None)
    return int(size)


def corollary_nonprime_evidence(n: int) -> dict:
    """Exact counts bearing on whether D_n can carry a prime labelling."""
    full = len(full_degree_labels(D(n)))
    f = factorize(n)
    k = f.factors[0][1] if f.omega == 1 else 0
    alpha = independence_number(n)
    evens = n // 2
    return {
        "n": n,
        "prime_power_exponent": k,
        "full_degree_count": full,
        "sy_bound": seoud_youssef_bound(n),
        "printed_lower_bound": prime_pi(n) + prime_pi(n // 2) + k + 1,
        "even_labels": evens,
        "independence_number": alpha,
        # a prime labelling puts the even labels on an independent set
        "sy_rules_out": full > seoud_youssef_bound(n),
        "independence_rules_out": evens > alpha,
    }


def _corollary_nonprime(ctx, verdict):
    n = ctx.n
    f = ctx.fact[n]
    if f.omega != 1 or f.factors[0][1] < 2:
        return
    ev = corollary_nonprime_evidence(n)
    verdict.pairs_checked = 1
    verdict.details = ev
    if ev["full_degree_count"] < ev["printed_lower_bound"]:
        verdict.notes.append(
            f"D_{n}: {ev['full_degree_count']} full-degree labels, below the printed count "
            f"{ev['printed_lower_bound']}; prime-labelling bound {ev['sy_bound']}"
        )


def verify_theorem(theorem_id: str, n: int, record: bool = False) -> TheoremVerdict:
    """Check one theorem over every applicable label pair of D_n.

    ``record=True`` keeps the hypothesis-satisfying pairs of one-directional
    checks in ``instances``.
    """
    if theorem_id not in THEOREM_IDS:
        raise ValueError(f"unknown theorem id {theorem_id!r}")
    n = int(n)
    if n < 1:
        raise ValueError("n must be positive")
    ctx = _context(n)
    verdict = TheoremVerdict(theorem_id, n, instances=[] if record else None)
    if theorem_id == "EQ_PRIME_POWERS":
        _eq_prime_powers(ctx, verdict, same_prime=False)
    elif theorem_id == "EQ_SAME_PRIME":
        _eq_prime_powers(ctx, verdict, same_prime=True)
    elif theorem_id == "EQ_MULTIPLE":
        _eq_multiple(ctx, verdict)
    elif theorem_id == "EQ_OMEGA":
        _eq_omega(ctx, verdict, record)
    elif theorem_id == "EQ_CONVERSE":
        _eq_converse(ctx, verdict)
    elif theorem_id == "NBHD_NESTING":
        _nbhd_nesting(ctx, verdict)
    elif theorem_id == "DEFICIENT_HAS_CRITICAL":
        _deficient_has_critical(ctx, verdict)
    else:
        _corollary_nonprime(ctx, verdict)
    return verdict


# Worked examples whose printed numbers are checked against enumeration.

def omega_example() -> dict:
    """Labels 14 and 16 in D_20: reduced labels 7 and 8 with equal floors."""
    ctx = _context(20)
    return {
        "n": 20,
        "labels": (14, 16),
        "reduced": (ctx.reduced[14], ctx.reduced[16]),
        "degrees": (int(ctx.deg[14]), int(ctx.deg[16])),
        "floors": (ctx.floor(7), ctx.floor(2)),
        "hypothesis": _omega_hyp(ctx, 14, 16) and _omega_hyp(ctx, 16, 14),
    }


def omega_converse_nonexample() -> dict:
    """Labels 10 and 14 in D_23 have equal degrees although the floors for 5 and 7 differ."""
    ctx = _context(23)
    return {
        "n": 23,
        "labels": (10, 14),
        "degrees": (int(ctx.deg[10]), int(ctx.deg[14])),
        "floors": (ctx.floor(5), ctx.floor(7)),
        "printed_degree": 13,
        "hypothesis": _omega_hyp(ctx, 10, 14),
    }


def annotations(n_max: int) -> list[str]:
    """Known disagreements between printed values and enumeration, for orders up to n_max."""
    notes = []
    if n_max >= 8:
        ev = corollary_nonprime_evidence(8)
        notes.append(
            f"D_8 full-degree count {ev['full_degree_count']} < printed lower bound "
            f"{ev['printed_lower_bound']} (prime-labelling bound {ev['sy_bound']}); "
            "non-primality of D_8 comes from search instead"
        )
    if n_max >= 23:
        ex = omega_converse_nonexample()
        notes.append(
            f"D_23 labels 10, 14: enumerated degrees {ex['degrees'][0]} and {ex['degrees'][1]} "
            f"(printed {ex['printed_degree']}); floors {ex['floors'][0]} != {ex['floors'][1]}, "
            "so the omega criterion is not necessary"
        )
    return notes


def verify_all(n_max: int, ids=THEOREM_IDS) -> dict[str, list[TheoremVerdict]]:
    results: dict[str, list[TheoremVerdict]] = {tid: [] for tid in ids}
    for n in range(2, int(n_max) + 1):
        for tid in ids:
            results[tid].append(verify_theorem(tid, n))
    return results
