import pytest

from diophantine.graphio import PETERSEN_FIGURE_LABELLING, generate
from diophantine.labeller import (
    Labelling,
    LabellingError,
    SearchConfig,
    SimpleGraph,
    SolverCapacityError,
    Verdict,
    is_diophantine,
    is_prime_graph,
    solve,
    verify,
)
from diophantine.numtheory import is_prime

from oracles import labellable_by_permutation, small_graph_corpus

CORPUS = small_graph_corpus()


def test_simple_graph_invariants():
    g = SimpleGraph.from_edges(3, [(1, 2), (2, 3)])
    assert g.edges() == [(1, 2), (2, 3)]
    assert g.degree(2) == 2 and g.neighbours(2) == [1, 3]
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(3, [(1, 4)])
    with pytest.raises(ValueError):
        SimpleGraph(2, (frozenset({2}), frozenset()))


def test_labelling_must_be_bijective():
    with pytest.raises(LabellingError):
        Labelling((1, 1, 2))
    with pytest.raises(LabellingError):
        Labelling((1, 4, 2))
    with pytest.raises(LabellingError):
        Labelling.from_mapping({1: 1, 3: 2})
    assert Labelling.from_mapping({2: 1, 1: 2}).assignment == (2, 1)


def test_verify_petersen_figure():
    assert verify(generate("petersen"), PETERSEN_FIGURE_LABELLING, "dio") == []


def test_verify_k5_identity():
    bad = verify(generate("complete", 5), Labelling.identity(5), "dio")
    assert bad == [(2, 4, 2)]


def test_verify_path_prime():
    assert verify(generate("path", 3), Labelling.identity(3), "prime") == []


def test_verify_size_mismatch():
    with pytest.raises(LabellingError):
        verify(generate("path", 3), Labelling.identity(4))


@pytest.mark.parametrize("graph, mode, verdict", [
    (generate("complete", 5), "dio", Verdict.UNSATISFIABLE),
    (generate("petersen"), "dio", Verdict.SATISFIABLE),
    (generate("complete", 4), "dio", Verdict.SATISFIABLE),
    (generate("maximal_diophantine", 8), "prime", Verdict.UNSATISFIABLE),
])
def test_solve_examples(graph, mode, verdict):
    result = solve(graph, SearchConfig(mode=mode))
    assert result.verdict is verdict
    if result.satisfiable:
        assert verify(graph, result.labelling, mode) == []
    else:
        assert result.labelling is None


def test_wrappers():
    assert is_diophantine(generate("petersen"))
    c7 = generate("cycle", 7)
    assert is_prime_graph(c7) and is_diophantine(c7)
    k5 = generate("complete", 5)
    assert not is_diophantine(k5) and not is_prime_graph(k5)


def test_capacity():
    with pytest.raises(SolverCapacityError):
        solve(generate("path", 65))
    with pytest.raises(ValueError):
        solve(SimpleGraph(0, ()))
    with pytest.raises(ValueError):
        SearchConfig(node_limit=0)


def test_large_sparse_graph_solves():
    result = solve(generate("path", 64), SearchConfig(mode="prime"))
    assert result.satisfiable


def test_node_limit_reports_limit():
    result = solve(generate("maximal_prime", 13), SearchConfig(mode="prime", node_limit=1))
    assert result.verdict is Verdict.LIMIT_EXCEEDED and result.labelling is None
    result = solve(generate("petersen"), SearchConfig(node_limit=3))
    assert result.verdict is Verdict.LIMIT_EXCEEDED
    assert solve(generate("petersen"), SearchConfig(node_limit=10**6)).satisfiable


def test_deterministic():
    g = generate("petersen")
    a, b = solve(g), solve(g)
    assert a.labelling == b.labelling
    assert (a.stats.decisions, a.stats.backtracks) == (b.stats.decisions, b.stats.backtracks)


@pytest.mark.parametrize("name, n, edges", [c for c in CORPUS if c[1] >= 6 or c[0].startswith(("cycle", "max"))],
                         ids=lambda v: v if isinstance(v, str) else "")
@pytest.mark.parametrize("mode", ["dio", "prime"])
def test_agrees_with_permutation_oracle(name, n, edges, mode):
    graph = SimpleGraph.from_edges(n, edges)
    result = solve(graph, SearchConfig(mode=mode))
    assert result.satisfiable == labellable_by_permutation(n, edges, prime=mode == "prime")
    if result.satisfiable:
        assert verify(graph, result.labelling, mode) == []


def test_all_small_graphs_against_oracle():
    for name, n, edges in CORPUS:
        if n > 5:
            continue
        graph = SimpleGraph.from_edges(n, edges)
        for mode in ("dio", "prime"):
            got = solve(graph, SearchConfig(mode=mode)).satisfiable
            assert got == labellable_by_permutation(n, edges, prime=mode == "prime"), (name, mode)


def test_prime_implies_diophantine_and_prime_order_equivalence():
    for name, n, edges in CORPUS:
        graph = SimpleGraph.from_edges(n, edges)
        prime = is_prime_graph(graph)
        dio = is_diophantine(graph)
        assert not prime or dio, name
        if is_prime(n):
            assert prime == dio, name


def test_embedding_characterization():
    # a labelling is Diophantine iff every edge maps onto an edge of D_n
    from diophantine.maximal import D, is_adjacent
    for name, n, edges in CORPUS[:400]:
        graph = SimpleGraph.from_edges(n, edges)
        result = solve(graph)
        if result.satisfiable:
            lab = result.labelling
            assert all(is_adjacent(lab[u], lab[v], D(n)) for u, v in edges)
