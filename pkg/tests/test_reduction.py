"""
    tests for the reductions and the assignment round trip
"""

import pytest
from hypothesis import given, settings

from pydfacons import (
    Assignment,
    Clause,
    Dfa,
    PreconditionError,
    PureCnf,
    StructuralError,
    brute_force_oracle,
    canonical_cycle,
    dlh_reduce,
    evaluate,
    extract_assignment,
    gold_reduce,
    is_consistent,
    satisfying_assignments,
    witness_dfa,
)
from tests.strategies import pure_cnfs


def test_gold_reduce_fig1(fig1_cnf):
    instance = gold_reduce(fig1_cnf)
    sample = instance.sample
    assert instance.k == 6
    assert instance.construction == "gold"
    assert instance.cnf == fig1_cnf
    assert sample.positives == ("", "abb", "aabb", "aaaaaa")
    assert len(sample.negatives) == 21
    assert "bb" in sample.negatives
    assert {"a", "aa", "aaa", "aaaa", "aaaaa"} <= set(sample.negatives)
    # clause 0 does not mention x1 (r = 4) or x2 (r = 5)
    assert "baa" in sample.negatives
    assert "ba" in sample.negatives
    assert "baaa" not in sample.negatives


def test_gold_reduce_unit(unit_cnf):
    instance = gold_reduce(unit_cnf)
    assert instance.k == 2
    assert instance.sample.positives == ("", "aa", "bb")
    assert instance.sample.negatives == ("a", "baa")


@given(pure_cnfs())
def test_gold_reduce_sizes(cnf):
    instance = gold_reduce(cnf)
    k = cnf.n + cnf.m
    assert instance.k == k
    assert len(instance.sample.positives) == 2 + cnf.positive_count
    variable_misses = sum(cnf.n - len(clause.variables) for clause in cnf.clauses)
    assert len(instance.sample.negatives) == (k - 1) + cnf.negative_count + cnf.m * cnf.m + variable_misses


def test_witness_dfa(fig1_cnf, fig1_dfa, unit_cnf):
    assert witness_dfa(fig1_cnf, Assignment.from_bits("011")) == fig1_dfa
    assert witness_dfa(unit_cnf, Assignment.from_bits("1")) == Dfa(
        state_count=2, transitions=((1, 1), (0, 0)), accepting=(0,)
    )

    with pytest.raises(PreconditionError) as ex:
        witness_dfa(fig1_cnf, Assignment.from_bits("111"))
    assert ex.value.clause == 0


def test_witness_dfa_picks_smallest_satisfying_variable():
    cnf = PureCnf(variable_count=3, clauses=(Clause.pos(0, 1, 2),))
    dfa = witness_dfa(cnf, Assignment.from_bits("011"))
    assert dfa.step(0, "b") == 1 + 1


@given(pure_cnfs())
@settings(max_examples=50, deadline=None)
def test_witness_is_consistent(cnf):
    sample = gold_reduce(cnf).sample
    for beta in satisfying_assignments(cnf):
        dfa = witness_dfa(cnf, beta)
        assert dfa.state_count == cnf.n + cnf.m
        assert is_consistent(dfa, sample)
        assert extract_assignment(cnf, dfa) == beta


def test_canonical_cycle(fig1_dfa):
    assert canonical_cycle(fig1_dfa, 6) == (0, 1, 2, 3, 4, 5)

    short = Dfa(state_count=3, transitions=((1, 0), (0, 0), (2, 2)))
    with pytest.raises(StructuralError) as ex:
        canonical_cycle(short, 3)
    assert ex.value.position == 2


def test_extract_assignment(fig1_cnf, fig1_dfa):
    assert extract_assignment(fig1_cnf, fig1_dfa).to_bits() == "011"

    # relabel states so the cycle is not 0..5
    order = (0, 5, 1, 4, 2, 3)
    position = {state: i for i, state in enumerate(order)}
    relabelled = Dfa(
        state_count=6,
        transitions=[
            tuple(order[t] for t in fig1_dfa.transitions[position[s]]) for s in range(6)
        ],
        accepting=(0,),
    )
    assert extract_assignment(fig1_cnf, relabelled).to_bits() == "011"


def test_extract_assignment_preconditions(fig1_cnf, fig1_dfa):
    bigger = Dfa(
        state_count=7,
        transitions=fig1_dfa.transitions + ((6, 6),),
        accepting=(0,),
    )
    with pytest.raises(PreconditionError):
        extract_assignment(fig1_cnf, bigger)

    table = list(fig1_dfa.transitions)
    table[3] = (4, 0)
    with pytest.raises(PreconditionError) as ex:
        extract_assignment(fig1_cnf, Dfa(state_count=6, transitions=table, accepting=(0,)))
    assert ex.value.word == "bb"


def test_dlh_reduce(fig1_cnf):
    instance = dlh_reduce(fig1_cnf)
    assert instance.k == 3
    assert instance.construction == "dlh"
    sample = instance.sample
    # a^n, then a^{i-1} b a^n b for the positive clauses 2 and 3
    assert sample.positives == ("aaa", "abaaab", "aabaaab")
    assert set(sample.negatives) == {
        "a", "aa", "aaaa", "aaaaa",
        "baaab",
        "baa", "ba",
        "abaaa", "aba",
        "aabaaa", "aabaa",
    }

    assert dlh_reduce(fig1_cnf, extra_state=True).k == 4
    assert dlh_reduce(fig1_cnf, extra_state=True).sample == sample


def test_dlh_reduce_no_consistent_dfa_at_n(fig1_cnf):
    instance = dlh_reduce(fig1_cnf)
    assert evaluate(fig1_cnf, Assignment.from_bits("011"))
    assert brute_force_oracle(instance.sample, instance.k) is None
