"""
    Models for pure-polarity CNF formulas.

    Variables are 0-based in the core; conversions to 1-based notations happen at the edges.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

from pydfacons.exceptions import ClauseSizeError, InputError
from pydfacons.models.base import BaseModel

MAX_CLAUSE_SIZE = 3


@dataclass(frozen=True)
class Clause(BaseModel):
    """
    A class representing a clause whose literals are all positive or all negative.
    """

    positive: bool
    variables: Tuple[int, ...]

    def __post_init__(self):
        variables = tuple(sorted(set(self.variables)))
        if not variables:
            raise InputError({"message": "Clause must contain at least one variable"})
        if len(variables) > MAX_CLAUSE_SIZE:
            raise ClauseSizeError(
                {
                    "message": f"Clause has {len(variables)} distinct variables, at most {MAX_CLAUSE_SIZE} allowed",
                    "size": len(variables),
                }
            )
        for variable in variables:
            if not isinstance(variable, int) or variable < 0:
                raise InputError({"message": f"Invalid variable index {variable!r}"})
        self._normalize("variables", variables)

    @classmethod
    def pos(cls, *variables: int) -> "Clause":
        return cls(positive=True, variables=variables)

    @classmethod
    def neg(cls, *variables: int) -> "Clause":
        return cls(positive=False, variables=variables)

    def is_satisfied_by(self, values: Sequence[bool]) -> bool:
        return any(values[j] == self.positive for j in self.variables)

    def literals(self) -> Tuple[int, ...]:
        """Signed 1-based literals, DIMACS style."""
        sign = 1 if self.positive else -1
        return tuple(sign * (j + 1) for j in self.variables)

    def __str__(self):
        prefix = "" if self.positive else "¬"
        return " ∨ ".join(f"{prefix}x{j}" for j in self.variables)


@dataclass(frozen=True)
class PureCnf(BaseModel):
    """
    A class representing an ordered list of pure clauses over variables 0..variable_count-1.
    """

    variable_count: int
    clauses: Tuple[Clause, ...]

    def __post_init__(self):
        if not isinstance(self.variable_count, int) or self.variable_count < 1:
            raise InputError(
                {"message": f"Formula needs at least one variable, got {self.variable_count!r}"}
            )
        clauses = tuple(self.clauses)
        if not clauses:
            raise InputError({"message": "Formula needs at least one clause"})
        for index, clause in enumerate(clauses):
            for variable in clause.variables:
                if variable >= self.variable_count:
                    raise InputError(
                        {
                            "message": f"Clause {index} uses variable {variable} of {self.variable_count}",
                            "clause": index,
                        }
                    )
        self._normalize("clauses", clauses)

    @property
    def n(self) -> int:
        return self.variable_count

    @property
    def m(self) -> int:
        return len(self.clauses)

    @property
    def positive_count(self) -> int:
        return sum(1 for clause in self.clauses if clause.positive)

    @property
    def negative_count(self) -> int:
        return self.m - self.positive_count

    def __str__(self):
        return " ∧ ".join(f"({clause})" for clause in self.clauses)


@dataclass(frozen=True)
class Assignment(BaseModel):
    """
    A class representing a truth assignment, ``values[j]`` is the value of x_j.
    """

    values: Tuple[bool, ...]

    def __post_init__(self):
        self._normalize("values", tuple(bool(v) for v in self.values))

    @classmethod
    def from_bits(cls, bits: str) -> "Assignment":
        """
        :param bits: String of 0 and 1, one character per variable.
        :return: Assignment
        """
        if not bits or any(c not in "01" for c in bits):
            raise InputError(
                {"message": f"Assignment must be a non-empty string of 0 and 1, got {bits!r}"}
            )
        return cls(values=tuple(c == "1" for c in bits))

    def to_bits(self) -> str:
        return "".join("1" if v else "0" for v in self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, index):
        return self.values[index]
