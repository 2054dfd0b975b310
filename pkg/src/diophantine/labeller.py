"""Check labellings of arbitrary graphs and search for Diophantine or prime labellings.

A labelling of a graph of order n is a Diophantine labelling iff it embeds
the graph's edges into the edges of D_n (R_n for prime labellings). The
solver assigns labels to vertices by backtracking with forward checking
over bitmask candidate sets, which caps the order at 64.
"""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable

from .maximal import Kind, MaximalGraphSpec, full_degree_labels, gcd_allows

MAX_VERTICES = 64
_CLOCK_EVERY = 1024


class LabellingError(ValueError):
    pass


class SolverCapacityError(ValueError):
    pass


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices 1..n.

    ``adjacency[v - 1]`` is the neighbour set of vertex v.
    """

    vertex_count: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self):
        n = self.vertex_count
        if n < 0 or len(self.adjacency) != n:
            raise ValueError("adjacency must have one entry per vertex")
        for v, nbrs in enumerate(self.adjacency, start=1):
            for w in nbrs:
                if not 1 <= w <= n:
                    raise ValueError(f"vertex {w} out of range 1..{n}")
                if w == v:
                    raise ValueError(f"loop at vertex {v}")
                if v not in self.adjacency[w - 1]:
                    raise ValueError(f"edge {v}-{w} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {u}-{v} out of range 1..{n}")
            nbrs[u - 1].add(v)
            nbrs[v - 1].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @property
    def n(self) -> int:
        return self.vertex_count

    def neighbours(self, v: int) -> list[int]:
        return sorted(self.adjacency[v - 1])

    def degree(self, v: int) -> int:
        return len(self.adjacency[v - 1])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(1, self.n + 1) for v in sorted(self.adjacency[u - 1]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adjacency) // 2


@dataclass(frozen=True)
class Labelling:
    """Bijection from vertices 1..n to labels 1..n; ``assignment[v - 1]`` labels vertex v."""

    assignment: tuple[int, ...]

    def __post_init__(self):
        n = len(self.assignment)
        for lab in self.assignment:
            if not 1 <= lab <= n:
                raise LabellingError(f"label {lab} outside 1..{n}")
        if len(set(self.assignment)) != n:
            raise LabellingError("labelling is not a bijection")

    @classmethod
    def identity(cls, n: int) -> "Labelling":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_mapping(cls, mapping: dict[int, int]) -> "Labelling":
        n = len(mapping)
        if sorted(mapping) != list(range(1, n + 1)):
            raise LabellingError("labelling must cover vertices 1..n exactly once")
        return cls(tuple(mapping[v] for v in range(1, n + 1)))

    def __getitem__(self, v: int) -> int:
        return self.assignment[v - 1]

    def __len__(self) -> int:
        return len(self.assignment)


def verify(graph: SimpleGraph, labelling: Labelling, mode="dio") -> list[tuple[int, int, int]]:
    """Edges (u, v, gcd) whose endpoint labels break the labelling condition."""
    kind = Kind.parse(mode)
    if len(labelling) != graph.n:
        raise LabellingError(f"labelling has {len(labelling)} labels for {graph.n} vertices")
    bad = []
    for u, v in graph.edges():
        g = gcd(labelling[u], labelling[v])
        if not gcd_allows(g, graph.n, kind):
            bad.append((u, v, g))
    return bad


class Verdict(str, enum.Enum):
    SATISFIABLE = "satisfiable"
    UNSATISFIABLE = "unsatisfiable"
    LIMIT_EXCEEDED = "limit_exceeded"


@dataclass(frozen=True)
class SearchConfig:
    mode: Kind = Kind.DIOPHANTINE
    node_limit: int = 10**7
    time_limit: float = 60.0
    max_vertices: int = MAX_VERTICES

    def __post_init__(self):
        object.__setattr__(self, "mode", Kind.parse(self.mode))
        if self.node_limit <= 0 or self.time_limit <= 0:
            raise ValueError("search limits must be positive")


@dataclass
class SearchStats:
    decisions: int = 0
    backtracks: int = 0
    elapsed: float = 0.0


@dataclass
class SearchResult:
    verdict: Verdict
    labelling: Labelling | None = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def satisfiable(self) -> bool:
        return self.verdict is Verdict.SATISFIABLE


class _LimitReached(Exception):
    pass


def _popcount(x: int) -> int:
    return bin(x).count("1")


def solve(graph: SimpleGraph, config: SearchConfig | None = None) -> SearchResult:
    """Search for a labelling of ``graph`` under ``config.mode``.

    Vertices are picked by fewest remaining candidate labels, ties broken by
    higher graph degree then lower id; candidates are tried in ascending order.
    UNSATISFIABLE is only returned after the whole tree has been exhausted.
    """
    config = config or SearchConfig()
    n = graph.n
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    if n > config.max_vertices:
        raise SolverCapacityError(f"order {n} exceeds solver cap {config.max_vertices}")
    spec = MaximalGraphSpec(n, config.mode)
    stats = SearchStats()
    start = time.perf_counter()

    # compat[l] has bit m-1 set iff labels l and m may share an edge
    compat = [0] * (n + 1)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if a != b and gcd_allows(gcd(a, b), n, spec.kind):
                compat[a] |= 1 << (b - 1)
    label_deg = [_popcount(c) for c in compat]
    full_mask = 0
    for a in full_degree_labels(spec):
        full_mask |= 1 << (a - 1)

    all_labels = (1 << n) - 1
    nbr_mask = [0] * (n + 1)
    gdeg = [0] * (n + 1)
    domain = [0] * (n + 1)
    for v in range(1, n + 1):
        for w in graph.adjacency[v - 1]:
            nbr_mask[v] |= 1 << (w - 1)
        gdeg[v] = graph.degree(v)
        dom = 0
        for a in range(1, n + 1):
            if label_deg[a] >= gdeg[v]:
                dom |= 1 << (a - 1)
        if gdeg[v] == n - 1:
            dom &= full_mask
        domain[v] = dom

    assignment = [0] * (n + 1)
    order = sorted(range(1, n + 1), key=lambda v: (-gdeg[v], v))

    def check_limits():
        if stats.decisions >= config.node_limit:
            raise _LimitReached
        if stats.decisions % _CLOCK_EVERY == 0 and time.perf_counter() - start > config.time_limit:
            raise _LimitReached

    def search(domain: list[int], unassigned: list[int]) -> bool:
        if not unassigned:
            return True
        # every label must still be reachable by some unassigned vertex
        union = 0
        for v in unassigned:
            union |= domain[v]
        if _popcount(union) < len(unassigned):
            return False
        v = min(unassigned, key=lambda w: _popcount(domain[w]))
        rest = [w for w in unassigned if w != v]
        cands = domain[v]
        while cands:
            low = cands & -cands
            cands ^= low
            label = low.bit_length()
            stats.decisions += 1
            check_limits()
            new = domain.copy()
            ok = True
            for w in rest:
                d = new[w] & ~low
                if nbr_mask[v] >> (w - 1) & 1:
                    d &= compat[label]
                if not d:
                    ok = False
                    break
                new[w] = d
            if ok:
                assignment[v] = label
                if search(new, rest):
                    return True
                assignment[v] = 0
            stats.backtracks += 1
        return False

    try:
        found = all(domain[v] for v in order) and search(domain, order)
    except _LimitReached:
        stats.elapsed = time.perf_counter() - start
        return SearchResult(Verdict.LIMIT_EXCEEDED, None, stats)
    stats.elapsed = time.perf_counter() - start
    if not found:
        return SearchResult(Verdict.UNSATISFIABLE, None, stats)
    labelling = Labelling(tuple(assignment[1:]))
    assert not verify(graph, labelling, spec.kind)
    return SearchResult(Verdict.SATISFIABLE, labelling, stats)


def is_diophantine(graph: SimpleGraph) -> bool:
    return _decide(graph, Kind.DIOPHANTINE)


def is_prime_graph(graph: SimpleGraph) -> bool:
    return _decide(graph, Kind.PRIME)


def _decide(graph, kind):
    result = solve(graph, SearchConfig(mode=kind))
    if result.verdict is Verdict.LIMIT_EXCEEDED:
        raise RuntimeError(f"search limit reached after {result.stats.decisions} decisions")
    return result.satisfiable
