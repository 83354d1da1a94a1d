import os

import pytest

from pydfacons import Clause, Dfa, PureCnf

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


class Helpers:
    @staticmethod
    def path(filename):
        return os.path.join(ROOT, filename)

    @staticmethod
    def load_text(filename):
        with open(os.path.join(ROOT, filename), "rb") as f:
            return f.read().decode("utf-8")


@pytest.fixture
def helpers():
    return Helpers()


@pytest.fixture
def fig1_cnf():
    # ¬x0 ∧ x1 ∧ x2
    return PureCnf(variable_count=3, clauses=(Clause.neg(0), Clause.pos(1), Clause.pos(2)))


@pytest.fixture
def fig1_dfa():
    return Dfa(
        state_count=6,
        transitions=((1, 3), (2, 4), (3, 5), (4, 3), (5, 0), (0, 0)),
        initial=0,
        accepting=(0,),
    )


@pytest.fixture
def unit_cnf():
    return PureCnf(variable_count=1, clauses=(Clause.pos(0),))
