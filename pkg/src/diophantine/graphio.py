"""Edge-list and DOT text formats, plus the named graph generators.

Edge-list format::

    # comments are allowed anywhere
    p <n>
    u v
    ...

Vertices are 1-indexed so that a vertex id can double as its label.
"""
from __future__ import annotations

from .labeller import Labelling, SimpleGraph
from .maximal import Kind, MaximalGraphSpec, adjacency_matrix


class GraphFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_edge_list(text: str) -> SimpleGraph:
    n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "p":
                raise GraphFormatError("expected header 'p <n>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 0:
                raise GraphFormatError("vertex count must be nonnegative", lineno)
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer endpoint in {line!r}", lineno) from None
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"endpoint out of range 1..{n} in {line!r}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise GraphFormatError("missing header 'p <n>'")
    return SimpleGraph.from_edges(n, edges)


def emit_edge_list(graph: SimpleGraph) -> str:
    lines = [f"p {graph.n}"] + [f"{u} {v}" for u, v in graph.edges()]
    return "\n".join(lines) + "\n"


def emit_dot(graph: SimpleGraph, labelling: Labelling | None = None, name: str = "G") -> str:
    """GraphViz DOT text; with a labelling, each vertex is named by its label."""
    def node(v):
        return labelling[v] if labelling is not None else v

    lines = [f"graph {name} {{"]
    lines += [f"  {node(v)};" for v in range(1, graph.n + 1)]
    lines += [f"  {node(u)} -- {node(v)};" for u, v in graph.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_labelling(text: str) -> Labelling:
    """Lines of 'vertex label'; '#' comments allowed."""
    mapping: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            v, lab = (int(x) for x in parts)
        except ValueError:
            raise GraphFormatError(f"expected 'vertex label', got {line!r}", lineno) from None
        if v in mapping:
            raise GraphFormatError(f"vertex {v} labelled twice", lineno)
        mapping[v] = lab
    return Labelling.from_mapping(mapping)


def emit_labelling(labelling: Labelling) -> str:
    return "".join(f"{v} {labelling[v]}\n" for v in range(1, len(labelling) + 1))


def _maximal(n: int, kind: Kind) -> SimpleGraph:
    mat = adjacency_matrix(MaximalGraphSpec(n, kind))
    return SimpleGraph(n, tuple(frozenset(int(w) + 1 for w in row.nonzero()[0]) for row in mat))


def generate(name: str, parameter: int | None = None) -> SimpleGraph:
    """Named graphs: path, cycle, star, wheel, complete, petersen,
    maximal_diophantine, maximal_prime. ``parameter`` is the order."""
    if name == "petersen":
        outer = [(i, i % 5 + 1) for i in range(1, 6)]
        spokes = [(i, i + 5) for i in range(1, 6)]
        inner = [(i + 5, (i + 1) % 5 + 6) for i in range(1, 6)]
        return SimpleGraph.from_edges(10, outer + spokes + inner)
    minimum = {"path": 1, "cycle": 3, "star": 1, "wheel": 4, "complete": 1,
               "maximal_diophantine": 1, "maximal_prime": 1}
    if name not in minimum:
        raise ValueError(f"unknown graph name {name!r}")
    if parameter is None or int(parameter) < minimum[name]:
        raise ValueError(f"{name} needs an order >= {minimum[name]}, got {parameter}")
    n = int(parameter)
    if name == "path":
        edges = [(i, i + 1) for i in range(1, n)]
    elif name == "cycle":
        edges = [(i, i % n + 1) for i in range(1, n + 1)]
    elif name == "star":
        edges = [(1, i) for i in range(2, n + 1)]
    elif name == "wheel":
        edges = [(1, i) for i in range(2, n + 1)] + [(i, i + 1) for i in range(2, n)] + [(n, 2)]
    elif name == "complete":
        edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    elif name == "maximal_diophantine":
        return _maximal(n, Kind.DIOPHANTINE)
    else:
        return _maximal(n, Kind.PRIME)
    return SimpleGraph.from_edges(n, edges)


# Vertex ids follow generate("petersen"): outer cycle 1..5, spokes i -- i+5.
PETERSEN_FIGURE_LABELLING = Labelling((6, 2, 3, 4, 10, 1, 7, 8, 9, 5))
