"""
    Reductions from pure 3SAT to DFA consistency over {a, b}.

    ``gold_reduce`` is the k = n + m construction whose consistent DFAs are
    exactly the witness automata of satisfying assignments. ``dlh_reduce``
    generalizes the textbook instance that the counterexamples refute.
"""

import logging
from typing import Tuple

from pydfacons.automata import is_consistent
from pydfacons.cnf import evaluate, falsified_clauses
from pydfacons.exceptions import PreconditionError, StructuralError
from pydfacons.models import Assignment, Dfa, PureCnf, ReductionInstance, Sample
from pydfacons.utils.constant import BINARY_ALPHABET, DLH, GOLD_STYLE

logger = logging.getLogger(__name__)

A, B = BINARY_ALPHABET


def gold_reduce(cnf: PureCnf) -> ReductionInstance:
    """
    Build the consistency instance with k = n + m states.

    States s_0..s_{m-1} stand for clauses and s_m..s_{k-1} for variables;
    ``a`` walks the k-cycle and ``b`` goes clause -> variable -> s_0.

    :param cnf: Pure formula.
    :return: Instance with the gold-style provenance.
    """
    n, m = cnf.n, cnf.m
    k = n + m

    positives = {"", A * k}
    negatives = {A * i for i in range(1, k)}
    for i, clause in enumerate(cnf.clauses):
        (positives if clause.positive else negatives).add(A * i + B + B)
        for r in range(k):
            if r < m or (r - m) not in clause.variables:
                negatives.add(A * i + B + A * (k - r))

    sample = Sample(positives=tuple(positives), negatives=tuple(negatives))
    logger.debug(f"gold reduction: k={k}, |P|={len(sample.positives)}, |N|={len(sample.negatives)}")
    return ReductionInstance(sample=sample, k=k, construction=GOLD_STYLE, cnf=cnf)


def witness_dfa(cnf: PureCnf, beta: Assignment) -> Dfa:
    """
    Build the k-state DFA consistent with ``gold_reduce(cnf)`` from a satisfying assignment.

    Each clause state reads ``b`` into the state of its smallest-index variable
    satisfying the clause; a variable state reads ``b`` into s_0 when the
    variable is true and loops otherwise.

    :param cnf: Pure formula.
    :param beta: Assignment satisfying the formula.
    :return: The witness DFA, s_0 initial and sole accepting state.
    """
    falsified = falsified_clauses(cnf, beta)
    if falsified:
        raise PreconditionError(
            {
                "message": f"Assignment {beta.to_bits()} falsifies clause {falsified[0]} ({cnf.clauses[falsified[0]]})",
                "clause": falsified[0],
            }
        )
    n, m = cnf.n, cnf.m
    k = n + m

    table = []
    for state in range(k):
        on_a = (state + 1) % k
        if state < m:
            clause = cnf.clauses[state]
            j = min(v for v in clause.variables if beta[v] == clause.positive)
            on_b = m + j
        else:
            on_b = 0 if beta[state - m] else state
        table.append((on_a, on_b))
    return Dfa(state_count=k, transitions=table, initial=0, accepting=(0,))


def canonical_cycle(dfa: Dfa, k: int) -> Tuple[int, ...]:
    """
    States reached by a^0, a^1, ..., a^{k-1}.

    :param dfa: DFA over an alphabet containing ``a``.
    :param k: Cycle length.
    :return: The k states, which must be pairwise distinct.
    """
    states, state = [], dfa.initial
    for i in range(k):
        if state in states:
            raise StructuralError(
                {
                    "message": f"a^{i} reaches state {state} already reached by a^{states.index(state)}",
                    "position": i,
                }
            )
        states.append(state)
        state = dfa.step(state, A)
    return tuple(states)


def extract_assignment(cnf: PureCnf, dfa: Dfa) -> Assignment:
    """
    Read a satisfying assignment off a k-state DFA consistent with ``gold_reduce(cnf)``.
    x_j is true iff the ``b`` edge of s_{m+j} points to s_0.

    :param cnf: Pure formula.
    :param dfa: Consistent DFA with exactly n + m states.
    :return: Assignment satisfying the formula.
    """
    instance = gold_reduce(cnf)
    if dfa.state_count != instance.k:
        raise PreconditionError(
            {"message": f"DFA has {dfa.state_count} states, the instance needs exactly {instance.k}"}
        )
    verdict = is_consistent(dfa, instance.sample)
    if not verdict.consistent:
        raise PreconditionError(
            {
                "message": f"DFA misclassifies {verdict.polarity} word {verdict.word!r}",
                "word": verdict.word,
            }
        )

    cycle = canonical_cycle(dfa, instance.k)
    m = cnf.m
    beta = Assignment(
        values=tuple(dfa.step(cycle[m + j], B) == cycle[0] for j in range(cnf.n))
    )
    if not evaluate(cnf, beta):
        raise StructuralError(
            {"message": f"Extracted assignment {beta.to_bits()} does not satisfy the formula"}
        )
    return beta


def dlh_reduce(cnf: PureCnf, extra_state: bool = False) -> ReductionInstance:
    """
    Build the textbook-style instance, with clauses and variables numbered from 1.

    P = {a^n} ∪ {a^{i-1} b a^n b | C_i positive}
    N = {a^t, a^{n+t} | 1 <= t < n} ∪ {a^{i-1} b a^n b | C_i negative}
        ∪ {a^{i-1} b a^{n-j+1} | x_j not a variable of C_i}

    :param cnf: Pure formula.
    :param extra_state: Report the n + 1 bound instead of n.
    :return: Instance with the dlh provenance.
    """
    n = cnf.n
    positives = {A * n}
    negatives = {A * t for t in range(1, n)} | {A * (n + t) for t in range(1, n)}
    for index, clause in enumerate(cnf.clauses):
        prefix = A * index + B  # a^{i-1} b with i = index + 1
        (positives if clause.positive else negatives).add(prefix + A * n + B)
        for variable in range(n):
            if variable not in clause.variables:
                # j = variable + 1, so a^{n-j+1} = a^{n-variable}
                negatives.add(prefix + A * (n - variable))

    sample = Sample(positives=tuple(positives), negatives=tuple(negatives))
    k = n + 1 if extra_state else n
    logger.debug(f"dlh reduction: k={k}, |P|={len(sample.positives)}, |N|={len(sample.negatives)}")
    return ReductionInstance(sample=sample, k=k, construction=DLH, cnf=cnf)
