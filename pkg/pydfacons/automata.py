"""
    Word semantics, sample consistency and DOT export for automata.
"""

import itertools
import logging
import re
from typing import Dict, List, Optional, Tuple

import graphviz

from pydfacons.exceptions import FormatError, InputError
from pydfacons.models import Dfa, MealyMachine, Sample, Verdict, Word
from pydfacons.utils.constant import NEGATIVE, POSITIVE
from pydfacons.utils.params_utils import enf_word

logger = logging.getLogger(__name__)


def accepts(dfa: Dfa, word: Word) -> bool:
    """
    Whether the DFA accepts the word.

    :param dfa: Complete DFA.
    :param word: Word over the DFA alphabet.
    :return: True if the run from the initial state ends in an accepting state.
    """
    enf_word(word, dfa.alphabet)
    return dfa.is_accepting(dfa.run(word))


def is_consistent(dfa: Dfa, sample: Sample) -> Verdict:
    """
    Check that the DFA accepts every positive word and rejects every negative word.

    :param dfa: Complete DFA.
    :param sample: Sample over the same alphabet.
    :return: Verdict, carrying the shortest-then-least misclassified word on violation.
    """
    if set(sample.alphabet) != set(dfa.alphabet):
        raise InputError(
            {
                "message": f"Sample alphabet {''.join(sample.alphabet)} differs from DFA alphabet {''.join(dfa.alphabet)}"
            }
        )
    for word in sample.words:
        expected = word in sample.positives
        if dfa.is_accepting(dfa.run(word)) != expected:
            polarity = POSITIVE if expected else NEGATIVE
            logger.debug(f"Violation on {polarity} word {word!r}")
            return Verdict(consistent=False, word=word, polarity=polarity)
    return Verdict(consistent=True)


def mealy_output(machine: MealyMachine, word: Word) -> str:
    """
    Output emitted on the last transition of the run of the word.
    The empty word has no transition and yields the reject symbol.

    :param machine: Mealy machine.
    :param word: Word over the input alphabet.
    :return: Output symbol
    """
    enf_word(word, machine.input_alphabet)
    if not word:
        return machine.reject_symbol
    state, output = machine.initial, machine.reject_symbol
    for symbol in word:
        index = machine.input_alphabet.index(symbol)
        output = machine.outputs[state][index]
        state = machine.transitions[state][index]
    return output


def words_up_to(alphabet, max_length: int, min_length: int = 0) -> Tuple[Word, ...]:
    """
    All words with length in [min_length, max_length], shortest-first then by alphabet order.
    """
    return tuple(
        "".join(symbols)
        for length in range(min_length, max_length + 1)
        for symbols in itertools.product(alphabet, repeat=length)
    )


def to_dot(dfa: Dfa, labels: Optional[Dict[int, str]] = None) -> str:
    """
    Render the DFA as a DOT digraph.

    States are emitted in index order and edges in (state, symbol) order;
    symbols sharing a source and target are merged into one edge label.
    The entry arrow comes from ``__start``, a point-shaped node that is not
    a state, so the numbered node statements are exactly the DFA's states.

    :param dfa: DFA to render.
    :param labels: Optional display name per state, default is ``s<index>``.
    :return: DOT text
    """
    labels = labels or {}
    dot = graphviz.Digraph(name="dfa", graph_attr={"rankdir": "LR"}, node_attr={"shape": "circle"})
    dot.node(START_NODE, shape="point")
    for state in range(dfa.state_count):
        shape = {"shape": "doublecircle"} if dfa.is_accepting(state) else {}
        dot.node(str(state), label=graphviz.nohtml(labels.get(state, f"s{state}")), **shape)
    dot.edge(START_NODE, str(dfa.initial))
    for state in range(dfa.state_count):
        merged: Dict[int, List[str]] = {}
        for symbol, target in zip(dfa.alphabet, dfa.transitions[state]):
            merged.setdefault(target, []).append(symbol)
        for target, symbols in merged.items():
            dot.edge(str(state), str(target), label=",".join(symbols))
    return dot.source


START_NODE = "__start"
ATTRIBUTE_PATTERN = re.compile(r'(\w+)=("(?:[^"\\]|\\.)*"|[^\s\]]+)')
NODE_PATTERN = re.compile(r"^\s*(\w+)\s*(?:\[(.*)\])?\s*;?\s*$")
EDGE_PATTERN = re.compile(r"^\s*(\w+)\s*->\s*(\w+)\s*(?:\[(.*)\])?\s*;?\s*$")
DOT_KEYWORDS = ("graph", "node", "edge")


def _attributes(text: Optional[str]) -> Dict[str, str]:
    attributes = {}
    for key, value in ATTRIBUTE_PATTERN.findall(text or ""):
        if value.startswith('"'):
            value = value[1:-1].replace('\\"', '"')
        attributes[key] = value
    return attributes


def from_dot(text: str) -> Dfa:
    """
    Read back a DFA rendered by ``to_dot``.

    :param text: DOT text.
    :return: The DFA
    """
    states, accepting, initial = [], [], None
    edges: Dict[Tuple[int, str], int] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        edge = EDGE_PATTERN.match(line)
        node = None if edge else NODE_PATTERN.match(line)
        if edge:
            source, target = edge.group(1), edge.group(2)
            if source == START_NODE and target.isdigit():
                initial = int(target)
                continue
            symbols = _attributes(edge.group(3)).get("label")
            if not symbols or not source.isdigit() or not target.isdigit():
                raise FormatError({"message": f"Invalid DOT edge: {line.strip()}", "line": number})
            for symbol in symbols.split(","):
                if (int(source), symbol) in edges:
                    raise FormatError(
                        {"message": f"Duplicate edge for state {source} on {symbol!r}", "line": number}
                    )
                edges[(int(source), symbol)] = int(target)
        elif node and node.group(1).isdigit():
            state = int(node.group(1))
            states.append(state)
            if _attributes(node.group(2)).get("shape") == "doublecircle":
                accepting.append(state)
        elif node and node.group(1) not in DOT_KEYWORDS + (START_NODE,):
            raise FormatError({"message": f"Unknown DOT node {node.group(1)!r}", "line": number})
    if not states or sorted(states) != list(range(len(states))):
        raise FormatError({"message": "DOT nodes must be numbered 0..n-1"})
    if initial is None:
        raise FormatError({"message": "DOT has no entry edge"})
    alphabet = tuple(sorted({symbol for _, symbol in edges}))
    try:
        table = [[edges[(state, symbol)] for symbol in alphabet] for state in range(len(states))]
    except KeyError as ex:
        raise FormatError({"message": f"DOT transition table is partial, missing {ex.args[0]}"})
    return Dfa(
        state_count=len(states),
        transitions=table,
        initial=initial,
        accepting=accepting,
        alphabet=alphabet,
    )
