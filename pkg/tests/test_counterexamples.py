"""
    tests for the reproductions of published counterexamples
"""

import pytest

from pydfacons import (
    CounterexampleReport,
    Dfa,
    REPRODUCTIONS,
    InputError,
    VerificationError,
    brute_force_sat,
    dlh_instance,
    dlh_reduce,
    dlh_thm621,
    dlh_three_state_impossibility,
    fernau_instance,
    fernau_lemma15,
    find_consistent_dfa,
    from_dot,
    gold_fig1_sanity,
    gold_reduce,
    is_consistent,
    mealy_compactness_demo,
    parse_dimacs,
    to_dot,
    verify_all,
)
from pydfacons import counterexamples
from pydfacons.utils.formats import parse_dfa


def test_fernau_instance(helpers):
    sample, k, dfa, cnf = fernau_instance()
    assert k == 12
    assert (len(sample.positives), len(sample.negatives)) == (16, 26)
    assert cnf == parse_dimacs(helpers.load_text("testdata/cnf/fernau.cnf"))
    assert brute_force_sat(cnf) is None
    assert is_consistent(dfa, sample)
    assert dfa == parse_dfa(helpers.load_text("testdata/dfa/fernau_fig2.dfa"))
    assert from_dot(to_dot(dfa, counterexamples.FERNAU_STATE_LABELS)) == dfa


def test_fernau_instance_rejects_t_to_f(helpers):
    sample = fernau_instance().sample
    broken = parse_dfa(helpers.load_text("testdata/dfa/fernau_fig2_t_to_f.dfa"))
    verdict = is_consistent(broken, sample)
    assert not verdict
    assert verdict.word == "b"
    assert verdict.polarity == "positive"


def test_dlh_instance(helpers):
    sample, dfa, cnf = dlh_instance()
    assert cnf == parse_dimacs(helpers.load_text("testdata/cnf/dlh8.cnf"))
    assert dlh_reduce(cnf).sample == sample
    assert dfa.state_count == 9
    assert is_consistent(dfa, sample)
    assert brute_force_sat(cnf) is None
    assert to_dot(dfa, counterexamples.DLH_STATE_LABELS).count("label=sink") == 1


def test_fernau_lemma15():
    report = fernau_lemma15()
    assert report.passed
    assert report.name == "fernau-lemma15"
    assert report.formula_satisfiable is False
    assert report.claimed_bound == 12
    assert report.exhibited_dfa_states == 12
    assert report.consistency_verified
    assert report.verdict == "SAT@k=12"


def test_dlh_thm621():
    report = dlh_thm621()
    assert report.passed
    assert report.formula_satisfiable is False
    assert report.claimed_bound == 9
    assert report.exhibited_dfa_states == 9
    assert "match" in report.narrative


def test_dlh_three_state_impossibility():
    report = dlh_three_state_impossibility()
    assert report.passed
    assert report.formula_satisfiable is True
    assert report.impossibility_verified is True
    assert report.verdict == "UNSAT@k=3"
    assert report.exhibited_dfa_states == 4
    assert is_consistent(report.dfa, report.sample)


def test_dlh_three_state_sample_has_four_state_dfa(fig1_cnf):
    sample = dlh_reduce(fig1_cnf).sample
    assert find_consistent_dfa(sample, 3) is None
    assert find_consistent_dfa(sample, 4).state_count == 4

    by_hand = Dfa(state_count=4, transitions=((1, 0), (2, 3), (3, 3), (0, 0)), accepting=(3,))
    assert is_consistent(by_hand, sample)


def test_mealy_compactness_demo():
    report = mealy_compactness_demo()
    assert report.passed
    assert report.formula_satisfiable is None
    assert report.claimed_bound == 2
    assert report.verdict == "UNSAT@k=1 SAT@k=2"
    assert "formula_satisfiable" in report.to_record()


def test_gold_fig1_sanity(fig1_cnf, fig1_dfa):
    report = gold_fig1_sanity()
    assert report.passed
    assert report.verdict == "SAT@k=6"
    assert report.dfa == fig1_dfa
    assert report.sample == gold_reduce(fig1_cnf).sample


def _failing_report():
    return CounterexampleReport(
        name="broken",
        claimed_bound=1,
        consistency_verified=False,
        passed=False,
        verdict="SAT@k=1",
        narrative="always fails",
    )


def test_verify_all(monkeypatch):
    names = list(REPRODUCTIONS)
    assert names == ["fernau-lemma15", "dlh-thm621", "dlh-3state", "mealy-gap", "gold-fig1"]

    for name in names:
        monkeypatch.setitem(REPRODUCTIONS, name, gold_fig1_sanity)
    monkeypatch.setitem(REPRODUCTIONS, "mealy-gap", _failing_report)

    with pytest.raises(VerificationError) as ex:
        verify_all()
    assert ex.value.failures == ["broken"]

    reports = verify_all(raise_on_failure=False)
    assert [r.passed for r in reports] == [True, True, True, False, True]


def _raising_report():
    raise InputError({"message": "bad data"})


def test_verify_all_times_and_catches(monkeypatch):
    monkeypatch.setattr(
        counterexamples, "REPRODUCTIONS", {"gold-fig1": gold_fig1_sanity, "boom": _raising_report}
    )
    reports = verify_all(raise_on_failure=False)
    assert [r.name for r in reports] == ["gold-fig1", "boom"]
    assert all(r.elapsed >= 0 for r in reports)
    assert reports[0].passed
    assert reports[0].error is None

    boom = reports[1]
    assert not boom.passed
    assert boom.verdict == "ERROR"
    assert boom.error == "bad data"
    assert boom.to_record()["error"] == "bad data"

    with pytest.raises(VerificationError) as ex:
        verify_all()
    assert ex.value.failures == ["boom"]


@pytest.mark.slow
def test_verify_all_passes():
    reports = verify_all()
    assert [r.name for r in reports] == list(REPRODUCTIONS)
    assert all(r.passed for r in reports)
