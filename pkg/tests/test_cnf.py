"""
    tests for DIMACS ingestion and evaluation
"""

import itertools

import pytest

from pydfacons import (
    Assignment,
    CapacityError,
    Clause,
    ClauseSizeError,
    InputError,
    PureCnf,
    PurityError,
    brute_force_sat,
    evaluate,
    falsified_clauses,
    parse_dimacs,
    satisfying_assignments,
)


def test_parse_dimacs(helpers, fig1_cnf, unit_cnf):
    assert parse_dimacs(helpers.load_text("testdata/cnf/fig1.cnf")) == fig1_cnf
    assert parse_dimacs(helpers.load_text("testdata/cnf/unit.cnf")) == unit_cnf

    fernau = parse_dimacs(helpers.load_text("testdata/cnf/fernau.cnf"))
    assert (fernau.n, fernau.m) == (4, 6)
    assert fernau.clauses[2] == Clause.pos(0, 3)
    assert fernau.clauses[4].literals() == (-2, -4)


def test_parse_dimacs_satlib_tail(helpers):
    cnf = parse_dimacs(helpers.load_text("testdata/cnf/satlib_tail.cnf"))
    assert cnf.clauses == (Clause.pos(0, 1, 2), Clause.neg(0, 1))


def test_parse_dimacs_duplicate_literals():
    cnf = parse_dimacs("p cnf 2 1\n1 1 2 0\n")
    assert cnf.clauses == (Clause.pos(0, 1),)


def test_parse_dimacs_errors(helpers):
    with pytest.raises(PurityError) as ex:
        parse_dimacs(helpers.load_text("testdata/cnf/mixed.cnf"))
    assert ex.value.clause == 0
    assert ex.value.code == 4

    with pytest.raises(ClauseSizeError) as ex:
        parse_dimacs("p cnf 4 2\n1 0\n1 2 3 4 0\n")
    assert ex.value.clause == 1
    assert ex.value.size == 4

    bad = [
        "1 2 0\n",
        "p cnf 2 1\np cnf 2 1\n1 0\n",
        "p cnf 2\n1 0\n",
        "p sat 2 1\n1 0\n",
        "p cnf 0 1\n",
        "p cnf 2 0\n",
        "p cnf 2 1\n1 x 0\n",
        "p cnf 2 1\n3 0\n",
        "p cnf 2 2\n1 0\n",
        "p cnf 2 1\n1 0\n2 0\n",
        "p cnf 2 2\n1 0\n0\n",
    ]
    for text in bad:
        with pytest.raises(InputError):
            parse_dimacs(text)


def test_evaluate(fig1_cnf):
    assert evaluate(fig1_cnf, Assignment.from_bits("011"))
    assert not evaluate(fig1_cnf, Assignment.from_bits("111"))
    assert falsified_clauses(fig1_cnf, Assignment.from_bits("100")) == [0, 1, 2]
    assert falsified_clauses(fig1_cnf, Assignment.from_bits("011")) == []

    with pytest.raises(InputError):
        evaluate(fig1_cnf, Assignment.from_bits("01"))


def test_satisfying_assignments():
    cnf = PureCnf(variable_count=2, clauses=(Clause.pos(0, 1), Clause.neg(0, 1)))
    assert [beta.to_bits() for beta in satisfying_assignments(cnf)] == ["01", "10"]
    assert brute_force_sat(cnf).to_bits() == "01"

    unsat = PureCnf(variable_count=1, clauses=(Clause.pos(0), Clause.neg(0)))
    assert brute_force_sat(unsat) is None

    wide = PureCnf(variable_count=25, clauses=(Clause.pos(0),))
    with pytest.raises(CapacityError):
        brute_force_sat(wide)


def test_brute_force_sat_matches_exhaustive_evaluation(helpers):
    for name, satisfiable in (("fig1", True), ("fernau", False), ("dlh8", False)):
        cnf = parse_dimacs(helpers.load_text(f"testdata/cnf/{name}.cnf"))
        exhaustive = any(
            evaluate(cnf, Assignment(values=values))
            for values in itertools.product((False, True), repeat=cnf.n)
        )
        assert exhaustive == satisfiable
        assert (brute_force_sat(cnf) is not None) == satisfiable
