from .base import BaseModel
from .automaton import Word, Sample, Dfa, MealyMachine, Verdict
from .formula import Clause, PureCnf, Assignment
from .instance import ReductionInstance
from .prefix_tree import PrefixTree
from .report import CounterexampleReport
