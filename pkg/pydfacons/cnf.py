"""
    DIMACS ingestion, evaluation and exhaustive satisfiability for pure CNF formulas.
"""

import itertools
import logging
from typing import Iterator, List, Optional

from pydfacons.exceptions import (
    CapacityError,
    ClauseSizeError,
    InputError,
    PurityError,
)
from pydfacons.models import Assignment, Clause, PureCnf
from pydfacons.utils.constant import BRUTE_FORCE_SAT_MAX_VARIABLES

logger = logging.getLogger(__name__)


def parse_dimacs(text: str) -> PureCnf:
    """
    Parse DIMACS CNF text into a pure formula.

    Comment lines start with ``c``. Tokens are whitespace separated and a
    clause may span lines. Everything after a ``%`` line is ignored, as are
    stray ``0`` tokens once all declared clauses are read.

    :param text: DIMACS text.
    :return: PureCnf with clauses in file order and 0-based variables.
    """
    header = None
    clauses: List[Clause] = []
    current: List[int] = []

    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            if header is not None:
                raise InputError({"message": f"Second problem line: {line}"})
            header = _parse_header(line)
            continue
        if header is None:
            raise InputError({"message": f"Clause data before problem line: {line}"})
        for token in line.split():
            try:
                literal = int(token)
            except ValueError:
                raise InputError({"message": f"Invalid literal {token!r}"})
            if literal != 0:
                if abs(literal) > header[0]:
                    raise InputError(
                        {
                            "message": f"Literal {literal} out of range for {header[0]} variables",
                            "clause": len(clauses),
                        }
                    )
                current.append(literal)
                continue
            if current:
                clauses.append(_make_clause(current, len(clauses)))
                current = []
            elif len(clauses) < header[1]:
                raise InputError({"message": "Empty clause", "clause": len(clauses)})

    if header is None:
        raise InputError({"message": "Missing problem line 'p cnf <nvars> <nclauses>'"})
    if current:
        clauses.append(_make_clause(current, len(clauses)))
    if len(clauses) != header[1]:
        raise InputError(
            {"message": f"Problem line declares {header[1]} clauses, found {len(clauses)}"}
        )
    cnf = PureCnf(variable_count=header[0], clauses=tuple(clauses))
    logger.debug(f"Parsed pure formula with n={cnf.n}, m={cnf.m}")
    return cnf


def _parse_header(line: str):
    parts = line.split()
    if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
        raise InputError({"message": f"Invalid problem line: {line}"})
    try:
        nvars, nclauses = int(parts[2]), int(parts[3])
    except ValueError:
        raise InputError({"message": f"Invalid problem line: {line}"})
    if nvars < 1:
        raise InputError({"message": "Formula needs at least one variable"})
    if nclauses < 1:
        raise InputError({"message": "Formula needs at least one clause"})
    return nvars, nclauses


def _make_clause(literals: List[int], index: int) -> Clause:
    if any(lit > 0 for lit in literals) and any(lit < 0 for lit in literals):
        raise PurityError(
            {
                "message": f"Clause {index} mixes positive and negative literals: {literals}",
                "clause": index,
            }
        )
    variables = {abs(lit) - 1 for lit in literals}
    if len(variables) < len(literals):
        logger.debug(f"Clause {index} has duplicate literals, deduplicated")
    try:
        return Clause(positive=literals[0] > 0, variables=tuple(variables))
    except ClauseSizeError as ex:
        raise ClauseSizeError(
            {"message": f"Clause {index}: {ex.message}", "clause": index, "size": ex.size}
        )


def _check_length(cnf: PureCnf, beta: Assignment):
    if len(beta) != cnf.n:
        raise InputError(
            {"message": f"Assignment has {len(beta)} values for {cnf.n} variables"}
        )


def evaluate(cnf: PureCnf, beta: Assignment) -> bool:
    """
    :param cnf: Pure formula.
    :param beta: Assignment with one value per variable.
    :return: Whether every clause is satisfied.
    """
    _check_length(cnf, beta)
    return all(clause.is_satisfied_by(beta.values) for clause in cnf.clauses)


def falsified_clauses(cnf: PureCnf, beta: Assignment) -> List[int]:
    """
    :param cnf: Pure formula.
    :param beta: Assignment with one value per variable.
    :return: Indices of the clauses the assignment falsifies, ascending.
    """
    _check_length(cnf, beta)
    return [
        index
        for index, clause in enumerate(cnf.clauses)
        if not clause.is_satisfied_by(beta.values)
    ]


def satisfying_assignments(cnf: PureCnf) -> Iterator[Assignment]:
    """
    Enumerate satisfying assignments in lexicographic order, false before true
    and variable 0 most significant.

    :param cnf: Pure formula with at most BRUTE_FORCE_SAT_MAX_VARIABLES variables.
    :return: Iterator of assignments
    """
    if cnf.n > BRUTE_FORCE_SAT_MAX_VARIABLES:
        raise CapacityError(
            {
                "message": f"Exhaustive search supports at most {BRUTE_FORCE_SAT_MAX_VARIABLES} variables, got {cnf.n}"
            }
        )
    for values in itertools.product((False, True), repeat=cnf.n):
        if all(clause.is_satisfied_by(values) for clause in cnf.clauses):
            yield Assignment(values=values)


def brute_force_sat(cnf: PureCnf) -> Optional[Assignment]:
    """
    :param cnf: Pure formula with at most BRUTE_FORCE_SAT_MAX_VARIABLES variables.
    :return: The lexicographically least satisfying assignment, or None if unsatisfiable.
    """
    return next(satisfying_assignments(cnf), None)
