"""
    Codecs for the line-oriented file formats.

    Sample files follow the Abbadingo layout:

        <word count> <alphabet size>
        <label> <length> <symbol> <symbol> ...

    with label 1 for positive words and symbols written as integers (0 -> a, 1 -> b).

    DFA table files:

        states <n> initial <i>
        accepting <i> <i> ...
        <state> <symbol> <target>       (one line per state and symbol)
"""

import logging
from typing import Dict, List, Sequence, Tuple

from pydfacons.exceptions import FormatError
from pydfacons.models import Dfa, Sample
from pydfacons.utils.constant import BINARY_ALPHABET, SAMPLE_FILE_SYMBOLS

logger = logging.getLogger(__name__)


def _ints(tokens: List[str], number: int) -> List[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise FormatError({"message": f"Expected integers, got {' '.join(tokens)}", "line": number})


def _data_lines(text: str):
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line and not line.startswith("#"):
            yield number, line


def parse_sample(text: str) -> Sample:
    """
    :param text: Abbadingo-style sample file content.
    :return: Sample over the first <alphabet size> letters.
    """
    lines = list(_data_lines(text))
    if not lines:
        raise FormatError({"message": "Sample file is empty"})
    number, header = lines[0]
    values = _ints(header.split(), number)
    if len(values) != 2 or values[0] < 0 or not 1 <= values[1] <= len(SAMPLE_FILE_SYMBOLS):
        raise FormatError({"message": f"Invalid sample header: {header}", "line": number})
    count, size = values
    alphabet = tuple(SAMPLE_FILE_SYMBOLS[:size])
    if len(lines) - 1 != count:
        raise FormatError(
            {"message": f"Header declares {count} words, found {len(lines) - 1}", "line": number}
        )

    labels: Dict[str, bool] = {}
    for number, line in lines[1:]:
        values = _ints(line.split(), number)
        if len(values) < 2 or values[0] not in (0, 1):
            raise FormatError({"message": f"Invalid word line: {line}", "line": number})
        label, length, symbols = values[0] == 1, values[1], values[2:]
        if length != len(symbols):
            raise FormatError(
                {"message": f"Length {length} does not match {len(symbols)} symbols", "line": number}
            )
        if any(not 0 <= s < size for s in symbols):
            raise FormatError({"message": f"Symbol out of range in: {line}", "line": number})
        word = "".join(alphabet[s] for s in symbols)
        if labels.get(word, label) != label:
            raise FormatError(
                {"message": f"Word {word!r} is labeled both positive and negative", "line": number}
            )
        if word in labels:
            logger.debug(f"Duplicate word {word!r} on line {number}")
        labels[word] = label

    return Sample(
        positives=tuple(w for w, label in labels.items() if label),
        negatives=tuple(w for w, label in labels.items() if not label),
        alphabet=tuple(alphabet),
    )


def format_sample(sample: Sample) -> str:
    """
    :param sample: Sample whose alphabet is a prefix of a, b, c, ...
    :return: Abbadingo-style text, words in shortest-first order.
    """
    if SAMPLE_FILE_SYMBOLS[: len(sample.alphabet)] != "".join(sample.alphabet):
        raise FormatError(
            {"message": f"Alphabet {''.join(sample.alphabet)} cannot be written as integers 0.."}
        )
    code = {symbol: str(i) for i, symbol in enumerate(sample.alphabet)}
    lines = [f"{len(sample)} {len(sample.alphabet)}"]
    for word in sample.words:
        label = "1" if word in sample.positives else "0"
        lines.append(" ".join([label, str(len(word))] + [code[s] for s in word]))
    return "\n".join(lines) + "\n"


def parse_dfa(text: str, alphabet: Sequence[str] = BINARY_ALPHABET) -> Dfa:
    """
    :param text: DFA table file content.
    :param alphabet: Symbols of the table, every state needs one transition per symbol.
    :return: Complete DFA over the alphabet.
    """
    lines = list(_data_lines(text))
    if len(lines) < 2:
        raise FormatError({"message": "DFA file needs a states line and an accepting line"})

    number, line = lines[0]
    parts = line.split()
    if len(parts) != 4 or parts[0] != "states" or parts[2] != "initial":
        raise FormatError({"message": f"Expected 'states <n> initial <i>': {line}", "line": number})
    state_count, initial = _ints([parts[1], parts[3]], number)

    number, line = lines[1]
    parts = line.split()
    if not parts or parts[0] != "accepting":
        raise FormatError({"message": f"Expected 'accepting <i...>': {line}", "line": number})
    accepting = _ints(parts[1:], number)

    edges: Dict[Tuple[int, str], int] = {}
    for number, line in lines[2:]:
        parts = line.split()
        if len(parts) != 3:
            raise FormatError({"message": f"Expected '<state> <symbol> <target>': {line}", "line": number})
        state, target = _ints([parts[0], parts[2]], number)
        if (state, parts[1]) in edges:
            raise FormatError(
                {"message": f"Duplicate transition for state {state} on {parts[1]!r}", "line": number}
            )
        edges[(state, parts[1])] = target

    unknown = sorted({symbol for _, symbol in edges} - set(alphabet))
    if unknown:
        raise FormatError(
            {"message": f"Symbols {', '.join(unknown)} are not in the alphabet {''.join(alphabet)}"}
        )
    missing = [
        (state, symbol)
        for state in range(state_count)
        for symbol in alphabet
        if (state, symbol) not in edges
    ]
    if missing:
        raise FormatError({"message": f"Transition table is partial, missing {missing[:5]}"})
    extra = [key for key in edges if not 0 <= key[0] < state_count]
    if extra:
        raise FormatError({"message": f"Transitions for unknown states: {extra[:5]}"})
    return Dfa(
        state_count=state_count,
        transitions=[[edges[(s, symbol)] for symbol in alphabet] for s in range(state_count)],
        initial=initial,
        accepting=accepting,
        alphabet=tuple(alphabet),
    )


def format_dfa(dfa: Dfa) -> str:
    """
    :param dfa: DFA.
    :return: DFA table text, transitions in (state, symbol) order.
    """
    lines = [
        f"states {dfa.state_count} initial {dfa.initial}",
        " ".join(["accepting"] + [str(s) for s in dfa.accepting]),
    ]
    for state in range(dfa.state_count):
        for symbol, target in zip(dfa.alphabet, dfa.transitions[state]):
            lines.append(f"{state} {symbol} {target}")
    return "\n".join(lines) + "\n"
