"""Command-line entry point.

Exit codes: 0 ok, 1 negative-but-valid result (UNSAT, violations,
mismatch, counterexamples), 2 usage or input errors, 3 search limit hit.
"""
from __future__ import annotations

import argparse
import csv
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from . import lemmas, theorems
from .graphio import GraphFormatError, emit_dot, emit_edge_list, emit_labelling, generate, parse_edge_list, parse_labelling
from .labeller import LabellingError, SearchConfig, SolverCapacityError, Verdict, solve, verify
from .maximal import (
    D,
    Kind,
    MaximalGraphSpec,
    degree_classes,
    dn_equals_rn,
    edge_count_bruteforce,
    edge_count_formula,
    full_degree_labels,
    seoud_youssef_bound,
)
from .numtheory import is_prime, reduced_label

BRUTE_MAX_N = 100_000
SURVEY_HEADER = ["n", "edges_formula", "edges_brute", "full_degree_count", "sy_bound", "dn_eq_rn", "n_is_prime"]


class UsageError(Exception):
    pass


@dataclass
class SurveyRow:
    n: int
    edges_formula: int
    edges_brute: int | None
    full_degree_count: int
    sy_bound: int
    dn_eq_rn: bool
    n_is_prime: bool


def survey_row(n: int, brute_upto: int = 0) -> SurveyRow:
    spec = D(n)
    formula = edge_count_formula(spec)
    brute = edge_count_bruteforce(spec) if n <= brute_upto else None
    row = SurveyRow(
        n=n,
        edges_formula=formula,
        edges_brute=brute,
        full_degree_count=len(full_degree_labels(spec)),
        sy_bound=seoud_youssef_bound(n),
        dn_eq_rn=dn_equals_rn(n),
        n_is_prime=is_prime(n),
    )
    assert row.dn_eq_rn == row.n_is_prime
    assert brute is None or brute == formula
    return row


def _survey_task(args):
    return survey_row(*args)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def cmd_maximal(args, out):
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    kind = Kind.parse(args.kind)
    graph = generate("maximal_diophantine" if kind is Kind.DIOPHANTINE else "maximal_prime", args.n)
    out.write(emit_edge_list(graph) if args.emit == "edges" else emit_dot(graph))
    return 0


def cmd_edges(args, out):
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    spec = MaximalGraphSpec(args.n, Kind.parse(args.kind))
    if args.method in ("brute", "both") and args.n > BRUTE_MAX_N:
        raise UsageError(f"brute force is limited to n <= {BRUTE_MAX_N}")
    if args.method == "formula":
        out.write(f"{edge_count_formula(spec)}\n")
        return 0
    if args.method == "brute":
        out.write(f"{edge_count_bruteforce(spec)}\n")
        return 0
    f, b = edge_count_formula(spec), edge_count_bruteforce(spec)
    out.write(f"{f} {b}\n")
    return 0 if f == b else 1


def cmd_degrees(args, out):
    if args.n < 2:
        raise UsageError("--n must be >= 2")
    spec = D(args.n)
    report = degree_classes(spec)
    class_index = {deg: i for i, deg in enumerate(report.classes)}
    out.write("label degree reduced class\n")
    for a in range(1, args.n + 1):
        d = int(report.degrees[a])
        if args.full_only and d != args.n - 1:
            continue
        out.write(f"{a} {d} {reduced_label(a, args.n)} {class_index[d]}\n")
    return 0


def cmd_solve(args, out):
    try:
        graph = parse_edge_list(_read(args.graph))
        config = SearchConfig(mode=args.mode, node_limit=args.node_limit, time_limit=args.time_limit)
        result = solve(graph, config)
    except (GraphFormatError, SolverCapacityError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    if result.verdict is Verdict.SATISFIABLE:
        out.write(emit_labelling(result.labelling))
        return 0
    if result.verdict is Verdict.UNSATISFIABLE:
        out.write("UNSAT\n")
        return 1
    out.write("LIMIT\n")
    return 3


def cmd_check(args, out):
    try:
        graph = parse_edge_list(_read(args.graph))
        labelling = parse_labelling(_read(args.labels))
        bad = verify(graph, labelling, args.mode)
    except (GraphFormatError, LabellingError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    if not bad:
        out.write("OK\n")
        return 0
    for u, v, g in bad:
        out.write(f"violation {u} {v} labels {labelling[u]} {labelling[v]} gcd {g}\n")
    return 1


def cmd_survey(args, out):
    if not 2 <= args.from_ <= args.to:
        raise UsageError("need 2 <= --from <= --to")
    tasks = [(n, args.brute_upto) for n in range(args.from_, args.to + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_survey_task, tasks))
    else:
        rows = [_survey_task(t) for t in tasks]
    try:
        fh = open(args.out, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from exc
    with fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(SURVEY_HEADER)
        for row in rows:
            d = asdict(row)
            writer.writerow(["" if d[k] is None else str(d[k]).lower() if isinstance(d[k], bool) else d[k]
                             for k in SURVEY_HEADER])
    out.write(f"wrote {len(rows)} rows to {args.out}\n")
    return 0


def cmd_verify_theorems(args, out):
    if args.n_max < 2:
        raise UsageError("--n-max must be >= 2")
    failures = 0
    results = theorems.verify_all(args.n_max)
    for tid, verdicts in results.items():
        pairs = sum(v.pairs_checked for v in verdicts)
        bad = [(v.n,) + c for v in verdicts for c in v.counterexamples]
        failures += len(bad)
        out.write(f"{tid}: n=2..{args.n_max} pairs={pairs} counterexamples={len(bad)}\n")
        for item in bad[:10]:
            out.write(f"  counterexample n={item[0]} ({item[1]}, {item[2]}): {item[3]}\n")
        for v in verdicts:
            for note in v.notes:
                out.write(f"  note: {note}\n")
    lemma_limit = min(args.n_max, 300)
    for res in lemmas.run_all(limit=lemma_limit, bracket_n_max=min(args.n_max, 150),
                              sqrt_limit=args.sqrt_limit):
        failures += len(res.counterexamples)
        out.write(f"lemma {res.name}: checked={res.checked} counterexamples={len(res.counterexamples)}\n")
    for note in theorems.annotations(args.n_max):
        out.write(f"annotation: {note}\n")
    out.write("PASS\n" if failures == 0 else f"FAIL ({failures} counterexamples)\n")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diophantine", description="Diophantine graph toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("maximal", help="emit the maximal graph of order N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=["dio", "prime"], default="dio")
    p.add_argument("--emit", choices=["edges", "dot"], default="edges")
    p.set_defaults(func=cmd_maximal)

    p = sub.add_parser("edges", help="edge count of D_N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["formula", "brute", "both"], default="formula")
    p.add_argument("--kind", choices=["dio", "prime"], default="dio")
    p.set_defaults(func=cmd_edges)

    p = sub.add_parser("degrees", help="degree table of D_N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--full-only", action="store_true")
    p.set_defaults(func=cmd_degrees)

    p = sub.add_parser("solve", help="search for a labelling")
    p.add_argument("--graph", required=True)
    p.add_argument("--mode", choices=["dio", "prime"], default="dio")
    p.add_argument("--node-limit", type=int, default=10**7)
    p.add_argument("--time-limit", type=float, default=60.0)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="verify a labelling")
    p.add_argument("--graph", required=True)
    p.add_argument("--labels", required=True)
    p.add_argument("--mode", choices=["dio", "prime"], default="dio")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("survey", help="CSV survey over a range of orders")
    p.add_argument("--from", dest="from_", type=int, required=True)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--brute-upto", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("verify-theorems", help="run the theorem and lemma checks")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--sqrt-limit", type=int, default=10**6)
    p.set_defaults(func=cmd_verify_theorems)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
