"""
    Model for the reproduction reports of published counterexamples.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional

from pydfacons.models.automaton import Dfa, Sample
from pydfacons.models.base import BaseModel

RECORD_FIELDS = (
    "name",
    "passed",
    "verdict",
    "formula_satisfiable",
    "claimed_bound",
    "exhibited_dfa_states",
    "consistency_verified",
    "impossibility_verified",
    "narrative",
    "error",
    "elapsed",
)


@dataclass(frozen=True)
class CounterexampleReport(BaseModel):
    """
    A class representing the outcome of one machine-checked reproduction.

    ``formula_satisfiable`` is None when the reproduction involves no formula.
    ``error`` holds the message of a library error the reproduction raised,
    ``elapsed`` its wall time in seconds once run through ``verify_all``.
    """

    name: str
    consistency_verified: bool
    passed: bool
    verdict: str
    narrative: str
    claimed_bound: Optional[int] = None
    formula_satisfiable: Optional[bool] = None
    exhibited_dfa_states: Optional[int] = None
    impossibility_verified: Optional[bool] = None
    error: Optional[str] = None
    elapsed: Optional[float] = field(default=None, compare=False)
    sample: Optional[Sample] = field(default=None, repr=False, compare=False)
    dfa: Optional[Dfa] = field(default=None, repr=False, compare=False)

    @classmethod
    def from_error(cls, name: str, message: str) -> "CounterexampleReport":
        return cls(
            name=name,
            consistency_verified=False,
            passed=False,
            verdict="ERROR",
            narrative=message,
            error=message,
        )

    def to_record(self) -> Dict:
        """
        Stable structured record, without the stored sample and automaton.
        :return: dict with the fields of RECORD_FIELDS
        """
        return {name: getattr(self, name) for name in RECORD_FIELDS}
