"""
    Machine-checked reproductions of published counterexamples.

    Two earlier binary-alphabet constructions admit small consistent DFAs for
    unsatisfiable formulas, the textbook construction has no 3-state DFA for a
    satisfiable formula, and a one-state Mealy machine accepts a language that
    needs a two-state DFA.
"""

import dataclasses
import logging
import time
from typing import Callable, Dict, List, NamedTuple, Optional

from pydfacons.automata import (
    from_dot,
    is_consistent,
    mealy_output,
    to_dot,
    words_up_to,
)
from pydfacons.cnf import brute_force_sat, evaluate
from pydfacons.exceptions import InternalConsistencyError, LibraryError, VerificationError
from pydfacons.models import (
    Clause,
    CounterexampleReport,
    Dfa,
    MealyMachine,
    PureCnf,
    Sample,
)
from pydfacons.reduction import dlh_reduce, extract_assignment, gold_reduce, witness_dfa
from pydfacons.solver import brute_force_oracle, find_consistent_dfa, min_states
from pydfacons.utils import constant as const

logger = logging.getLogger(__name__)


class FernauInstance(NamedTuple):
    sample: Sample
    k: int
    dfa: Dfa
    cnf: PureCnf


class DlhInstance(NamedTuple):
    sample: Sample
    dfa: Dfa
    cnf: PureCnf


# =============================================
# Lemma 15 instance: (x∨y)(y∨z)(v∨x)(¬x∨¬z)(¬v∨¬y)(¬x∨¬y)
# =============================================

# x, y, z, v -> 0, 1, 2, 3
FERNAU_CLAUSES = (
    Clause.pos(0, 1),
    Clause.pos(1, 2),
    Clause.pos(3, 0),
    Clause.neg(0, 2),
    Clause.neg(3, 1),
    Clause.neg(0, 1),
)

FERNAU_STATE_LABELS = {
    0: "t",
    1: "xy",
    2: "yz",
    3: "vx",
    4: "!x!z",
    5: "!v!y",
    6: "!x!y",
    7: "x",
    8: "y",
    9: "z",
    10: "v",
    11: "f",
}

# (on a, on b) per state; the a-chain runs t -> xy -> ... -> v -> f -> t
FERNAU_TRANSITIONS = (
    (1, 0),  # t
    (2, 7),  # xy -> x
    (3, 7),  # yz -> x
    (4, 7),  # vx -> x
    (5, 8),  # !x!z -> y
    (6, 8),  # !v!y -> y
    (7, 8),  # !x!y -> y
    (8, 0),  # x -> t
    (9, 11),  # y -> f
    (10, 9),  # z
    (11, 10),  # v
    (0, 0),  # f
)


def fernau_instance() -> FernauInstance:
    """
    The Lemma 15 instance for an unsatisfiable formula with n=4, m=6, k=12,
    together with the 12-state automaton consistent with it.
    """
    a = "a"
    positives = (
        ["", "b", a * 12, a * 11 + "b"]
        + [a * i + "bbb" for i in range(1, 7)]
        + [a * i + "bb" for i in range(1, 4)]
        + [a * i + "bba" for i in range(4, 7)]
    )
    negatives = (
        [a * j for j in range(1, 12)]
        + [a * i + "b" for i in range(1, 7)]
        + [a * i + "ba" for i in range(1, 7)]
        + [a * i + "bb" for i in range(4, 7)]
    )
    dfa = Dfa(
        state_count=12,
        transitions=FERNAU_TRANSITIONS,
        initial=0,
        accepting=(0,),
    )
    return FernauInstance(
        sample=Sample(positives=tuple(positives), negatives=tuple(negatives)),
        k=12,
        dfa=dfa,
        cnf=PureCnf(variable_count=4, clauses=FERNAU_CLAUSES),
    )


# =============================================
# Textbook instance, 1-based literals
# =============================================

DLH_LITERALS = (
    (-2, -3, -5),
    (-8,),
    (1, 4, 8),
    (1, 6, 8),
    (6, 7, 8),
    (-4, -6),
    (-1, -6),
    (-1, -7),
)

DLH_STATE_LABELS = {**{state: str(state + 1) for state in range(8)}, 8: "sink"}

DLH_TRANSITIONS = (
    (1, 8),
    (2, 8),
    (3, 7),
    (4, 7),
    (5, 7),
    (6, 8),
    (7, 8),
    (0, 0),
    (8, 8),
)


def _cnf_from_literals(variable_count: int, literal_sets) -> PureCnf:
    return PureCnf(
        variable_count=variable_count,
        clauses=tuple(
            Clause(positive=lits[0] > 0, variables=tuple(abs(lit) - 1 for lit in lits))
            for lits in literal_sets
        ),
    )


def dlh_instance() -> DlhInstance:
    """
    The 8-variable, 8-clause unsatisfiable instance with its listed word sets
    and the 9-state automaton consistent with them.
    """
    n, a = 8, "a"
    positive_clauses = [i for i, lits in enumerate(DLH_LITERALS, start=1) if lits[0] > 0]
    negative_clauses = [i for i, lits in enumerate(DLH_LITERALS, start=1) if lits[0] < 0]

    positives = [a * n] + [a * (i - 1) + "b" + a * n + "b" for i in positive_clauses]
    negatives = (
        [a * t for t in range(1, n)]
        + [a * (n + t) for t in range(1, n)]
        + [a * (i - 1) + "b" + a * n + "b" for i in negative_clauses]
        + [
            a * (i - 1) + "b" + a * (n - j + 1)
            for i in positive_clauses
            for j in range(1, n + 1)
            if j not in DLH_LITERALS[i - 1]
        ]
        + [
            a * (i - 1) + "b" + a * (n - j + 1)
            for i in negative_clauses
            for j in range(1, n + 1)
            if -j not in DLH_LITERALS[i - 1]
        ]
    )
    dfa = Dfa(state_count=9, transitions=DLH_TRANSITIONS, initial=0, accepting=(0,))
    return DlhInstance(
        sample=Sample(positives=tuple(positives), negatives=tuple(negatives)),
        dfa=dfa,
        cnf=_cnf_from_literals(n, DLH_LITERALS),
    )


# =============================================
# Reproductions
# =============================================


def _round_trips(dfa: Dfa, labels: Optional[Dict[int, str]] = None) -> bool:
    return from_dot(to_dot(dfa, labels)) == dfa


def fernau_lemma15() -> CounterexampleReport:
    sample, k, dfa, cnf = fernau_instance()
    satisfiable = brute_force_sat(cnf) is not None
    consistent = is_consistent(dfa, sample).consistent
    sizes = (len(sample.positives), len(sample.negatives))
    passed = (
        not satisfiable
        and consistent
        and dfa.state_count <= k
        and sizes == (16, 26)
        and _round_trips(dfa, FERNAU_STATE_LABELS)
    )
    return CounterexampleReport(
        name=const.FERNAU_LEMMA15,
        formula_satisfiable=satisfiable,
        claimed_bound=k,
        exhibited_dfa_states=dfa.state_count,
        consistency_verified=consistent,
        passed=passed,
        verdict=f"SAT@k={k}",
        narrative=(
            f"Unsatisfiable formula {cnf}; its Lemma 15 instance (|P|={sizes[0]}, "
            f"|N|={sizes[1]}) still has a consistent {dfa.state_count}-state DFA, "
            "so the instance does not encode satisfiability."
        ),
        sample=sample,
        dfa=dfa,
    )


def dlh_thm621() -> CounterexampleReport:
    sample, dfa, cnf = dlh_instance()
    instance = dlh_reduce(cnf, extra_state=True)
    generated_matches = instance.sample == sample
    satisfiable = brute_force_sat(cnf) is not None
    consistent = is_consistent(dfa, sample).consistent
    passed = (
        generated_matches
        and not satisfiable
        and consistent
        and dfa.state_count == instance.k
        and _round_trips(dfa, DLH_STATE_LABELS)
    )
    return CounterexampleReport(
        name=const.DLH_THM621,
        formula_satisfiable=satisfiable,
        claimed_bound=instance.k,
        exhibited_dfa_states=dfa.state_count,
        consistency_verified=consistent,
        passed=passed,
        verdict=f"SAT@k={instance.k}",
        narrative=(
            f"Unsatisfiable formula with n={cnf.n}, m={cnf.m}; the generated word sets "
            f"{'match' if generated_matches else 'DIFFER FROM'} the listed ones and a "
            f"{dfa.state_count}-state DFA (n+1 states) is consistent with them."
        ),
        sample=sample,
        dfa=dfa,
    )


def dlh_three_state_impossibility() -> CounterexampleReport:
    """
    ¬x1 ∧ x2 ∧ x3 is satisfiable, yet its textbook instance has no 3-state DFA.
    The backtracking solver and the enumeration oracle must agree on that.
    """
    cnf = PureCnf(variable_count=3, clauses=(Clause.neg(0), Clause.pos(1), Clause.pos(2)))
    instance = dlh_reduce(cnf)
    solved = find_consistent_dfa(instance.sample, instance.k)
    enumerated = brute_force_oracle(instance.sample, instance.k)
    if (solved is None) != (enumerated is None):
        raise InternalConsistencyError(
            {
                "message": f"Solver and oracle disagree at k={instance.k}: "
                f"solver {'found' if solved else 'none'}, oracle {'found' if enumerated else 'none'}",
                "k": instance.k,
            }
        )
    impossible = solved is None
    satisfiable = brute_force_sat(cnf) is not None

    # one extra state suffices
    exhibited = find_consistent_dfa(instance.sample, instance.k + 1)
    consistent = exhibited is not None and is_consistent(exhibited, instance.sample).consistent
    states = exhibited.state_count if exhibited is not None else None
    logger.info(f"dlh 3-state: impossible={impossible}, smallest DFA found has {states} states")

    return CounterexampleReport(
        name=const.DLH_THREE_STATE,
        formula_satisfiable=satisfiable,
        claimed_bound=instance.k,
        exhibited_dfa_states=states,
        consistency_verified=consistent,
        impossibility_verified=impossible,
        passed=impossible and satisfiable and consistent and states == instance.k + 1,
        verdict=f"{'UNSAT' if impossible else 'SAT'}@k={instance.k}",
        narrative=(
            f"Satisfiable formula {cnf}; no {instance.k}-state DFA separates its textbook "
            f"word sets (solver and oracle agree), the smallest consistent DFA has "
            f"{states} states."
        ),
        sample=instance.sample,
        dfa=exhibited,
    )


def mealy_compactness_demo() -> CounterexampleReport:
    """
    (a|b)*a: one Mealy state, two DFA states.
    """
    machine = MealyMachine(state_count=1, transitions=((0, 0),), outputs=(("1", "0"),))
    for word in words_up_to(machine.input_alphabet, 6, min_length=1):
        if (mealy_output(machine, word) == machine.accept_symbol) != word.endswith("a"):
            raise VerificationError(
                {"message": f"Mealy output disagrees with (a|b)*a on {word!r}", "word": word}
            )

    words = words_up_to(machine.input_alphabet, 2)
    sample = Sample(
        positives=tuple(w for w in words if w.endswith("a")),
        negatives=tuple(w for w in words if not w.endswith("a")),
    )
    states = min_states(sample, 2)
    if states != 2:
        raise VerificationError({"message": f"Expected 2 DFA states, minimum is {states}"})
    if brute_force_oracle(sample, 1) is not None:
        raise VerificationError({"message": "Oracle found a 1-state DFA for (a|b)*a"})
    dfa = find_consistent_dfa(sample, 2)
    consistent = dfa is not None and is_consistent(dfa, sample).consistent

    return CounterexampleReport(
        name=const.MEALY_GAP,
        claimed_bound=states,
        exhibited_dfa_states=dfa.state_count if dfa is not None else None,
        consistency_verified=consistent,
        impossibility_verified=True,
        passed=consistent,
        verdict=f"UNSAT@k=1 SAT@k={states}",
        narrative=(
            f"A {machine.state_count}-state Mealy machine accepts (a|b)*a on all nonempty "
            f"words up to length 6, while every consistent DFA needs {states} states."
        ),
        sample=sample,
        dfa=dfa,
    )


def fig1_formula() -> PureCnf:
    """¬x0 ∧ x1 ∧ x2"""
    return PureCnf(variable_count=3, clauses=(Clause.neg(0), Clause.pos(1), Clause.pos(2)))


def gold_fig1_sanity() -> CounterexampleReport:
    cnf = fig1_formula()
    instance = gold_reduce(cnf)
    beta = brute_force_sat(cnf)
    witness = witness_dfa(cnf, beta)
    consistent = is_consistent(witness, instance.sample).consistent
    found = find_consistent_dfa(instance.sample, instance.k)
    extracted = extract_assignment(cnf, found) if found is not None else None
    sizes = (len(instance.sample.positives), len(instance.sample.negatives))
    passed = (
        consistent
        and instance.k == 6
        and sizes == (4, 21)
        and beta.to_bits() == "011"
        and extracted is not None
        and evaluate(cnf, extracted)
    )
    return CounterexampleReport(
        name=const.GOLD_FIG1,
        formula_satisfiable=beta is not None,
        claimed_bound=instance.k,
        exhibited_dfa_states=witness.state_count,
        consistency_verified=consistent,
        passed=passed,
        verdict=f"SAT@k={instance.k}",
        narrative=(
            f"{cnf} reduces to k={instance.k}, |P|={sizes[0]}, |N|={sizes[1]}; the witness "
            f"for {beta.to_bits()} is consistent and the solver's DFA yields "
            f"{extracted.to_bits() if extracted else 'nothing'}."
        ),
        sample=instance.sample,
        dfa=witness,
    )


REPRODUCTIONS: Dict[str, Callable[[], CounterexampleReport]] = {
    const.FERNAU_LEMMA15: fernau_lemma15,
    const.DLH_THM621: dlh_thm621,
    const.DLH_THREE_STATE: dlh_three_state_impossibility,
    const.MEALY_GAP: mealy_compactness_demo,
    const.GOLD_FIG1: gold_fig1_sanity,
}


def _timed(name: str, reproduce: Callable[[], CounterexampleReport]) -> CounterexampleReport:
    start = time.perf_counter()
    try:
        report = reproduce()
    except LibraryError as ex:
        logger.error(f"Reproduction {name} raised {ex!r}")
        report = CounterexampleReport.from_error(name, ex.message)
    return dataclasses.replace(report, elapsed=time.perf_counter() - start)


def verify_all(raise_on_failure: bool = True) -> List[CounterexampleReport]:
    """
    Run every reproduction in fixed order, timing each one.

    A reproduction that raises a library error yields a failed report carrying
    the error message instead of stopping the run.

    :param raise_on_failure: Raise VerificationError listing failed reports.
    :return: Reports
    """
    reports = [_timed(name, reproduce) for name, reproduce in REPRODUCTIONS.items()]
    failures = [report.name for report in reports if not report.passed]
    if failures and raise_on_failure:
        raise VerificationError(
            {"message": f"Failed reproductions: {', '.join(failures)}", "failures": failures}
        )
    return reports
