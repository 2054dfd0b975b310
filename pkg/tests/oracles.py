"""Deliberately naive reference implementations, independent of the library code paths."""
from itertools import combinations, permutations
from math import gcd
import random


def edges_naive(n, prime=False):
    return sum(1 for a, b in combinations(range(1, n + 1), 2) if _ok(gcd(a, b), n, prime))


def degree_naive(a, n, prime=False):
    return sum(1 for b in range(1, n + 1) if b != a and _ok(gcd(a, b), n, prime))


def _ok(g, n, prime):
    return g == 1 if prime else n % g == 0


def labellable_by_permutation(n, edges, prime=False):
    """Try every one of the n! bijections."""
    for perm in permutations(range(1, n + 1)):
        if all(_ok(gcd(perm[u - 1], perm[v - 1]), n, prime) for u, v in edges):
            return True
    return False


def small_graph_corpus(seed=20240611):
    """(name, n, edges) for every graph on <= 4 vertices, every graph on 5 vertices,
    named families up to 7 vertices and seeded random graphs on 6 and 7 vertices."""
    corpus = []
    for n in range(1, 6):
        pairs = list(combinations(range(1, n + 1), 2))
        for mask in range(1 << len(pairs)):
            edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
            corpus.append((f"all{n}_{mask}", n, edges))
    for n in range(3, 8):
        corpus.append((f"cycle{n}", n, [(i, i % n + 1) for i in range(1, n + 1)]))
        corpus.append((f"complete{n}", n, list(combinations(range(1, n + 1), 2))))
        corpus.append((f"star{n}", n, [(1, i) for i in range(2, n + 1)]))
        corpus.append((f"path{n}", n, [(i, i + 1) for i in range(1, n)]))
        if n >= 4:
            wheel = [(1, i) for i in range(2, n + 1)] + [(i, i + 1) for i in range(2, n)] + [(n, 2)]
            corpus.append((f"wheel{n}", n, wheel))
        corpus.append((f"maxdio{n}", n, [(a, b) for a, b in combinations(range(1, n + 1), 2) if n % gcd(a, b) == 0]))
        corpus.append((f"maxprime{n}", n, [(a, b) for a, b in combinations(range(1, n + 1), 2) if gcd(a, b) == 1]))
    rng = random.Random(seed)
    for n in (6, 7):
        pairs = list(combinations(range(1, n + 1), 2))
        for i in range(40):
            density = rng.choice([0.5, 0.7, 0.8, 0.9, 0.95])
            edges = [p for p in pairs if rng.random() < density]
            corpus.append((f"rand{n}_{i}", n, edges))
    return corpus
