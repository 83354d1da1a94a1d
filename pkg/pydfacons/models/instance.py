"""
    Models for consistency instances produced by reductions.
"""

from dataclasses import dataclass

from pydfacons.exceptions import InputError
from pydfacons.models.automaton import Sample
from pydfacons.models.base import BaseModel
from pydfacons.models.formula import PureCnf
from pydfacons.utils.constant import CONSTRUCTIONS


@dataclass(frozen=True)
class ReductionInstance(BaseModel):
    """
    A class representing a consistency instance (sample, state bound) built from a formula.

    ``construction`` names the reduction: ``gold`` or ``dlh``.
    """

    sample: Sample
    k: int
    construction: str
    cnf: PureCnf

    def __post_init__(self):
        if self.construction not in CONSTRUCTIONS:
            raise InputError(
                {"message": f"Unknown construction {self.construction!r}, one of {CONSTRUCTIONS}"}
            )
        if not isinstance(self.k, int) or self.k < 1:
            raise InputError({"message": f"State bound must be positive, got {self.k!r}"})
