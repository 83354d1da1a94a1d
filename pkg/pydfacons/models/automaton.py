"""
    Models for samples and automata over a small alphabet.

    Words are plain strings whose characters are the symbols.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from pydfacons.exceptions import InputError
from pydfacons.models.base import BaseModel
from pydfacons.utils.constant import BINARY_ALPHABET
from pydfacons.utils.params_utils import enf_alphabet, enf_word, shortlex_key

Word = str


@dataclass(frozen=True)
class Sample(BaseModel):
    """
    A class representing the positive and negative words of a consistency instance.

    Word sets are stored deduplicated and sorted shortest-first, then by alphabet order.
    """

    positives: Tuple[Word, ...] = ()
    negatives: Tuple[Word, ...] = ()
    alphabet: Tuple[str, ...] = BINARY_ALPHABET

    def __post_init__(self):
        alphabet = enf_alphabet(self.alphabet)
        key = shortlex_key(alphabet)
        positives = tuple(sorted(set(self.positives), key=key))
        negatives = tuple(sorted(set(self.negatives), key=key))
        for word in positives + negatives:
            enf_word(word, alphabet)
        overlap = set(positives) & set(negatives)
        if overlap:
            word = sorted(overlap, key=key)[0]
            raise InputError(
                {
                    "message": f"Word {word!r} is both positive and negative",
                    "word": word,
                }
            )
        self._normalize("alphabet", alphabet)
        self._normalize("positives", positives)
        self._normalize("negatives", negatives)

    @property
    def words(self) -> Tuple[Word, ...]:
        """All words, shortest-first then lexicographic."""
        return tuple(sorted(self.positives + self.negatives, key=shortlex_key(self.alphabet)))

    def label(self, word: Word) -> Optional[bool]:
        """
        :param word: Word to look up.
        :return: True for positives, False for negatives, None otherwise.
        """
        if word in self.positives:
            return True
        if word in self.negatives:
            return False
        return None

    def __len__(self):
        return len(self.positives) + len(self.negatives)


@dataclass(frozen=True)
class Dfa(BaseModel):
    """
    A class representing a complete deterministic finite automaton.

    States are 0..state_count-1, and ``transitions[state][i]`` is the target
    of ``state`` on ``alphabet[i]``.
    """

    state_count: int
    transitions: Tuple[Tuple[int, ...], ...]
    initial: int = 0
    accepting: Tuple[int, ...] = ()
    alphabet: Tuple[str, ...] = BINARY_ALPHABET

    def __post_init__(self):
        alphabet = enf_alphabet(self.alphabet)
        if not isinstance(self.state_count, int) or self.state_count < 1:
            raise InputError(
                {"message": f"state_count must be a positive integer, got {self.state_count!r}"}
            )
        table = tuple(tuple(row) for row in self.transitions)
        if len(table) != self.state_count:
            raise InputError(
                {
                    "message": f"Transition table has {len(table)} rows for {self.state_count} states"
                }
            )
        for state, row in enumerate(table):
            if len(row) != len(alphabet):
                raise InputError(
                    {
                        "message": f"State {state} has {len(row)} transitions, alphabet has {len(alphabet)} symbols",
                        "state": state,
                    }
                )
            for target in row:
                self._check_state(target, "transition target")
        self._check_state(self.initial, "initial state")
        accepting = tuple(sorted(set(self.accepting)))
        for state in accepting:
            self._check_state(state, "accepting state")
        self._normalize("alphabet", alphabet)
        self._normalize("transitions", table)
        self._normalize("accepting", accepting)

    def _check_state(self, state, role: str):
        if not isinstance(state, int) or not 0 <= state < self.state_count:
            raise InputError(
                {"message": f"Invalid {role} {state!r} for {self.state_count} states"}
            )

    def step(self, state: int, symbol: str) -> int:
        return self.transitions[state][self.alphabet.index(symbol)]

    def run(self, word: Word, start: Optional[int] = None) -> int:
        """
        Fold the transitions over the word.
        :param word: Word over the alphabet, already validated.
        :param start: Start state, default is the initial state.
        :return: Reached state
        """
        state = self.initial if start is None else start
        for symbol in word:
            state = self.transitions[state][self.alphabet.index(symbol)]
        return state

    def is_accepting(self, state: int) -> bool:
        return state in self.accepting


@dataclass(frozen=True)
class MealyMachine(BaseModel):
    """
    A class representing a deterministic transducer with one binary output per transition.

    ``output_alphabet`` is ordered (accept symbol, reject symbol).
    """

    state_count: int
    transitions: Tuple[Tuple[int, ...], ...]
    outputs: Tuple[Tuple[str, ...], ...]
    initial: int = 0
    input_alphabet: Tuple[str, ...] = BINARY_ALPHABET
    output_alphabet: Tuple[str, str] = ("1", "0")

    def __post_init__(self):
        input_alphabet = enf_alphabet(self.input_alphabet)
        output_alphabet = tuple(self.output_alphabet)
        if len(output_alphabet) != 2 or output_alphabet[0] == output_alphabet[1]:
            raise InputError(
                {"message": f"Output alphabet needs exactly two symbols, got {output_alphabet}"}
            )
        if not isinstance(self.state_count, int) or self.state_count < 1:
            raise InputError(
                {"message": f"state_count must be a positive integer, got {self.state_count!r}"}
            )
        table = tuple(tuple(row) for row in self.transitions)
        outputs = tuple(tuple(row) for row in self.outputs)
        if len(table) != self.state_count or len(outputs) != self.state_count:
            raise InputError({"message": "Transition and output tables need one row per state"})
        for state in range(self.state_count):
            if len(table[state]) != len(input_alphabet) or len(outputs[state]) != len(input_alphabet):
                raise InputError(
                    {"message": f"State {state} is not total over the input alphabet", "state": state}
                )
            for target in table[state]:
                if not isinstance(target, int) or not 0 <= target < self.state_count:
                    raise InputError({"message": f"Invalid transition target {target!r}"})
            for out in outputs[state]:
                if out not in output_alphabet:
                    raise InputError({"message": f"Output {out!r} is not in {output_alphabet}"})
        if not isinstance(self.initial, int) or not 0 <= self.initial < self.state_count:
            raise InputError({"message": f"Invalid initial state {self.initial!r}"})
        self._normalize("input_alphabet", input_alphabet)
        self._normalize("output_alphabet", output_alphabet)
        self._normalize("transitions", table)
        self._normalize("outputs", outputs)

    @property
    def accept_symbol(self) -> str:
        return self.output_alphabet[0]

    @property
    def reject_symbol(self) -> str:
        return self.output_alphabet[1]


@dataclass(frozen=True)
class Verdict(BaseModel):
    """
    A class representing the result of checking a DFA against a sample.

    On violation, ``word`` is the shortest, then lexicographically least,
    misclassified word and ``polarity`` the set it came from.
    """

    consistent: bool
    word: Optional[Word] = None
    polarity: Optional[str] = None

    def __bool__(self):
        return self.consistent
