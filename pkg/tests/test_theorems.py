import pytest

from diophantine.theorems import (
    THEOREM_IDS,
    annotations,
    corollary_nonprime_evidence,
    eq_omega_hypothesis,
    independence_number,
    omega_converse_nonexample,
    omega_example,
    verify_theorem,
)


@pytest.mark.parametrize("tid", THEOREM_IDS)
@pytest.mark.parametrize("n", [2, 12, 20, 23, 36, 64, 81])
def test_no_counterexamples(tid, n):
    verdict = verify_theorem(tid, n)
    assert verdict.ok, verdict.counterexamples[:5]


@pytest.mark.parametrize("tid", ["EQ_PRIME_POWERS", "NBHD_NESTING", "EQ_OMEGA"])
def test_d20_pairs_are_checked(tid):
    verdict = verify_theorem(tid, 20)
    assert verdict.pairs_checked > 0 and verdict.ok


def test_omega_example_pair_is_recorded():
    verdict = verify_theorem("EQ_OMEGA", 20, record=True)
    assert (14, 16) in verdict.instances and (16, 14) in verdict.instances
    ex = omega_example()
    assert ex["degrees"] == (18, 18)
    assert ex["floors"] == (2, 2)
    assert ex["hypothesis"]


def test_d23_printed_degree_discrepancy():
    ex = omega_converse_nonexample()
    assert ex["degrees"] == (10, 10)
    assert ex["degrees"][0] != ex["printed_degree"]
    assert ex["floors"] == (4, 3)
    assert not eq_omega_hypothesis(10, 14, 23)


def test_unknown_theorem():
    with pytest.raises(ValueError):
        verify_theorem("NOPE", 10)


def test_vacuous_small_orders():
    for tid in THEOREM_IDS:
        assert verify_theorem(tid, 2).counterexamples == []


def test_nesting_needs_divisibility():
    # 7 and 8 in D_20 have equal degrees without nested neighbourhoods
    from diophantine.maximal import D, degree_formula, neighbours
    assert degree_formula(7, D(20)) == degree_formula(8, D(20))
    assert neighbours(7, D(20)) - {8} != neighbours(8, D(20)) - {7}


def test_corollary_evidence_d8():
    ev = corollary_nonprime_evidence(8)
    assert ev["full_degree_count"] == 6
    assert ev["sy_bound"] == 7
    assert ev["printed_lower_bound"] == 10
    assert ev["even_labels"] == 4 and ev["independence_number"] == 2
    assert ev["independence_rules_out"]
    verdict = verify_theorem("COROLLARY_NONPRIME", 8)
    assert verdict.ok and verdict.notes and verdict.details["n"] == 8


def test_corollary_skips_non_prime_powers():
    verdict = verify_theorem("COROLLARY_NONPRIME", 12)
    assert verdict.pairs_checked == 0 and not verdict.notes


@pytest.mark.parametrize("n, alpha", [(4, 1), (5, 2), (8, 2), (9, 4), (16, 5)])
def test_independence_number(n, alpha):
    assert independence_number(n) == alpha


def test_annotations():
    assert annotations(2) == []
    assert len(annotations(8)) == 1
    notes = annotations(23)
    assert len(notes) == 2 and "printed 13" in notes[1]
