import pytest

from nanoh.core_sets import CapExceededError, ValidationError
from nanoh.maps import classify_map
from nanoh.verify import (
    CONVERSES,
    IMPLICATIONS,
    enumerate_spaces,
    mine_counterexample,
    restricted_growth_strings,
    run_paper_fixtures,
    verify_map_theorems,
    verify_set_theorems,
)

import oracles


@pytest.mark.parametrize("n, expected", [(1, 2), (2, 8), (3, 40), (4, 240)])
def test_space_counts(n, expected):
    spaces = list(enumerate_spaces(n))
    assert len(spaces) == expected == oracles.bell(n) * 2**n
    assert len(set(spaces)) == expected


@pytest.mark.parametrize("n", range(0, 7))
def test_partition_enumeration_matches_oracle(n):
    rgs = list(restricted_growth_strings(n))
    assert len(rgs) == oracles.bell(n) == len(list(oracles.set_partitions(range(n))))
    assert rgs == sorted(rgs)


def test_enumeration_rejects():
    with pytest.raises(ValidationError):
        list(enumerate_spaces(0))
    with pytest.raises(CapExceededError):
        list(enumerate_spaces(5, cap=4))


def test_small_sweeps_are_clean():
    for r in verify_set_theorems(1) + verify_map_theorems(1):
        assert r.passed, r.to_dict()
    reports = verify_map_theorems(2)
    assert reports[0].theorem == "thm4-equivalence"
    # 10 spaces of size <= 2; maps 1^1,2^1,1^2,2^2 weighted by space counts
    assert reports[0].instances == 2 * 2 * 1 + 2 * 8 * 2 + 8 * 2 * 1 + 8 * 8 * 4
    assert all(r.passed for r in reports)


def test_reference_engine_matches_kernel_reports():
    a = [r.to_dict() for r in verify_map_theorems(2, engine="kernel")]
    b = [r.to_dict() for r in verify_map_theorems(2, engine="reference")]
    assert a == b


def test_fixture_report():
    report = run_paper_fixtures()
    assert report.passed, report.failures
    assert report.instances >= 40


@pytest.mark.parametrize("antecedent, consequent", CONVERSES)
def test_converse_witnesses_replay(antecedent, consequent):
    w = mine_counterexample((antecedent, consequent), 3, 3)
    assert w is not None
    assert w.classification[antecedent] and not w.classification[consequent]
    assert w.replay() == w.classification


@pytest.mark.parametrize("antecedent, consequent", IMPLICATIONS)
def test_forward_implications_have_no_witness(antecedent, consequent):
    assert mine_counterexample((antecedent, consequent), 3, 3) is None


def test_known_remark_witnesses():
    w = mine_counterexample("h-continuous=>continuous", 3, 3)
    assert w is not None
    w = mine_counterexample("h-irresolute=>h-totally-continuous", 3, 3)
    assert w is not None


def test_miner_first_witness_is_worker_independent():
    for imp in ("h-continuous=>h-irresolute", "h-contra-continuous=>totally-continuous"):
        serial = mine_counterexample(imp, 3, 3, workers=1)
        parallel = mine_counterexample(imp, 3, 3, workers=2)
        assert serial == parallel


def test_unknown_predicate():
    with pytest.raises(KeyError):
        mine_counterexample("fuzzy=>continuous")
    with pytest.raises(KeyError):
        mine_counterexample("continuous")


def test_witness_round_trip():
    w = mine_counterexample("h-open=>open", 2, 2)
    fmap = w.to_map()
    assert fmap.as_dict() == w.assignment
    assert classify_map(fmap).as_dict() == w.classification
