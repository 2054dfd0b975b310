"""Diophantine graphs: maximal graphs D_n and R_n, their edge and degree
formulas, exhaustive theorem checks, and a labelling solver."""
from .graphio import GraphFormatError, emit_dot, emit_edge_list, generate, parse_edge_list
from .labeller import (
    Labelling,
    LabellingError,
    SearchConfig,
    SearchResult,
    SimpleGraph,
    SolverCapacityError,
    Verdict,
    is_diophantine,
    is_prime_graph,
    solve,
    verify,
)
from .maximal import (
    D,
    Kind,
    MaximalGraphSpec,
    R,
    degree_bruteforce,
    degree_classes,
    degree_formula,
    dn_equals_rn,
    edge_count_bruteforce,
    edge_count_formula,
    full_degree_labels,
    is_adjacent,
    nonadjacency_witness,
    seoud_youssef_bound,
)
from .numtheory import (
    CriticalPower,
    Factorization,
    critical_power,
    factorize,
    find_sqrt_bracket,
    multiples_count,
    padic_valuation,
    prime_pi,
    primes_upto,
    reduced_label,
)
from .theorems import THEOREM_IDS, TheoremVerdict, verify_theorem

__version__ = "0.1.0"
