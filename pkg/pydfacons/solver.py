"""
    Exact decision procedure for DFA consistency.

    The search colors the nodes of the sample's prefix tree with at most k
    colors (the DFA states). A node's color fixes the transition from its
    parent's color, so same-colored nodes always send same-symbol children to
    one color, and accepting and rejecting nodes never share a color. A new
    color is only ever opened as the next unused one, which explores each
    relabeling of a DFA once.
"""

import itertools
import logging
import multiprocessing
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from pydfacons.automata import is_consistent
from pydfacons.exceptions import CapacityError, InputError, InternalConsistencyError
from pydfacons.models import Dfa, PrefixTree, Sample
from pydfacons.utils.constant import ORACLE_ALPHABET_SIZE, ORACLE_MAX_STATES
from pydfacons.utils.params_utils import shortlex_key

logger = logging.getLogger(__name__)

UNASSIGNED = -1


def build_prefix_tree(sample: Sample) -> PrefixTree:
    """
    Build the trie of all prefixes of the sample words.

    :param sample: Sample.
    :return: PrefixTree numbered in breadth-first order.
    """
    positives, negatives = set(sample.positives), set(sample.negatives)
    prefixes = {""}
    for word in sample.words:
        prefixes.update(word[:i] for i in range(1, len(word) + 1))
    words = sorted(prefixes, key=shortlex_key(sample.alphabet))
    index = {word: i for i, word in enumerate(words)}

    parents = [UNASSIGNED] + [index[word[:-1]] for word in words[1:]]
    children: List[Dict[str, int]] = [{} for _ in words]
    for node, word in enumerate(words[1:], start=1):
        children[parents[node]][word[-1]] = node
    labels = [
        True if word in positives else False if word in negatives else None
        for word in words
    ]
    return PrefixTree(
        alphabet=sample.alphabet,
        words=tuple(words),
        labels=tuple(labels),
        parents=tuple(parents),
        children=tuple(children),
    )


@dataclass
class _SearchState:
    colors: List[int]
    color_labels: List[Optional[bool]]
    delta: Dict[Tuple[int, int], int]
    used: int

    def copy(self) -> "_SearchState":
        return _SearchState(
            colors=list(self.colors),
            color_labels=list(self.color_labels),
            delta=dict(self.delta),
            used=self.used,
        )


class _ColoringSearch:
    """
    Backtracking over prefix-tree colorings.

    Decisions go to the frontier node (unassigned, parent assigned) with the
    fewest colors surviving propagation; ties go to the smallest node index.
    """

    def __init__(self, tree: PrefixTree, k: int):
        self.tree = tree
        self.k = k
        self.symbols = [UNASSIGNED] + [
            tree.alphabet.index(tree.edge(node)) for node in range(1, len(tree))
        ]
        self.children = [
            [(tree.alphabet.index(symbol), child) for symbol, child in kids.items()]
            for kids in tree.children
        ]
        self.decisions = 0

    def initial_state(self) -> Optional[_SearchState]:
        state = _SearchState(
            colors=[UNASSIGNED] * len(self.tree),
            color_labels=[None] * self.k,
            delta={},
            used=1,
        )
        if not self._assign(state, 0, 0):
            return None
        return state

    def _assign(self, state: _SearchState, node: int, color: int) -> bool:
        stack = [(node, color)]
        while stack:
            v, c = stack.pop()
            if state.colors[v] != UNASSIGNED:
                if state.colors[v] != c:
                    return False
                continue
            label = self.tree.labels[v]
            if label is not None:
                known = state.color_labels[c]
                if known is None:
                    state.color_labels[c] = label
                elif known != label:
                    return False
            state.colors[v] = c
            for symbol, child in self.children[v]:
                target = state.delta.get((c, symbol))
                if target is not None:
                    stack.append((child, target))
        return True

    def _extend(self, state: _SearchState, node: int, color: int) -> bool:
        source = state.colors[self.tree.parents[node]]
        symbol = self.symbols[node]
        state.delta[(source, symbol)] = color
        if color == state.used:
            state.used += 1
        parents = self.tree.parents
        for v in range(1, len(self.tree)):
            if (
                state.colors[v] == UNASSIGNED
                and self.symbols[v] == symbol
                and state.colors[parents[v]] == source
            ):
                if not self._assign(state, v, color):
                    return False
        return True

    def branches(self, state: _SearchState) -> Optional[List[_SearchState]]:
        """
        :return: None when every node is colored, otherwise the feasible
            successor states of the most constrained decision (maybe empty).
        """
        best: Optional[List[_SearchState]] = None
        seen = set()
        parents = self.tree.parents
        for v in range(1, len(self.tree)):
            if state.colors[v] != UNASSIGNED or state.colors[parents[v]] == UNASSIGNED:
                continue
            transition = (state.colors[parents[v]], self.symbols[v])
            if transition in seen:
                continue
            seen.add(transition)
            options = []
            for color in range(min(state.used + 1, self.k)):
                trial = state.copy()
                if self._extend(trial, v, color):
                    options.append(trial)
            if best is None or len(options) < len(best):
                best = options
            if len(best) <= 1:
                break
        return best

    def search(self, state: _SearchState) -> Optional[_SearchState]:
        branches = self.branches(state)
        if branches is None:
            return state
        self.decisions += 1
        for child in branches:
            result = self.search(child)
            if result is not None:
                return result
        return None

    def to_dfa(self, state: _SearchState) -> Dfa:
        arity = len(self.tree.alphabet)
        table = [
            [state.delta.get((color, symbol), color) for symbol in range(arity)]
            for color in range(state.used)
        ]
        accepting = [c for c in range(state.used) if state.color_labels[c] is True]
        return Dfa(
            state_count=state.used,
            transitions=table,
            initial=0,
            accepting=accepting,
            alphabet=self.tree.alphabet,
        )


def _search_branch(task: Tuple[_ColoringSearch, _SearchState]) -> Optional[_SearchState]:
    search, state = task
    return search.search(state)


def _parallel_search(
    search: _ColoringSearch, state: _SearchState, workers: Optional[int]
) -> Optional[_SearchState]:
    branches = search.branches(state)
    if branches is None:
        return state
    if not branches:
        return None
    pool = multiprocessing.Pool(processes=workers)
    try:
        for result in pool.imap_unordered(_search_branch, [(search, child) for child in branches]):
            if result is not None:
                return result
        return None
    finally:
        # drop branches still running
        pool.terminate()
        pool.join()


def _search_exact_bound(
    sample: Sample, tree: PrefixTree, k: int, parallel: bool, workers: Optional[int]
) -> Optional[Dfa]:
    search = _ColoringSearch(tree, k)
    state = search.initial_state()
    if state is not None:
        if parallel:
            state = _parallel_search(search, state, workers)
        else:
            state = search.search(state)
    logger.debug(
        f"k={k}: {'found' if state else 'no'} DFA over {len(tree)} prefix-tree nodes "
        f"after {search.decisions} decisions"
    )
    if state is None:
        return None

    dfa = search.to_dfa(state)
    verdict = is_consistent(dfa, sample)
    if not verdict.consistent or dfa.state_count > k:
        raise InternalConsistencyError(
            {"message": f"Solver produced an inconsistent DFA, {verdict.polarity} word {verdict.word!r}"}
        )
    return dfa


def find_consistent_dfa(
    sample: Sample, k: int, parallel: bool = False, workers: Optional[int] = None
) -> Optional[Dfa]:
    """
    Find a minimum-state complete DFA consistent with the sample, if one has at most k states.

    Bounds 1..k are tried in turn, so the DFA returned always has exactly
    min_states(sample, k) states. Transitions no sample prefix uses are
    completed as self-loops.

    :param sample: Sample.
    :param k: State bound, at least 1.
    :param parallel: Explore the first decision's branches in worker processes.
        The answer is the same, the witness may differ between runs.
    :param workers: Worker processes for parallel mode, default is the cpu count.
    :return: A consistent DFA, or None if no DFA with at most k states exists.
    """
    if not isinstance(k, int) or k < 1:
        raise InputError({"message": f"State bound must be a positive integer, got {k!r}"})
    tree = build_prefix_tree(sample)
    for bound in range(1, k + 1):
        dfa = _search_exact_bound(sample, tree, bound, parallel, workers)
        if dfa is not None:
            return dfa
    return None


def min_states(sample: Sample, k_max: int) -> Optional[int]:
    """
    :param sample: Sample.
    :param k_max: Largest state count to try.
    :return: The smallest k <= k_max admitting a consistent DFA, or None.
    """
    if not isinstance(k_max, int) or k_max < 1:
        raise InputError({"message": f"k_max must be a positive integer, got {k_max!r}"})
    dfa = find_consistent_dfa(sample, k_max)
    return None if dfa is None else dfa.state_count


def _check_oracle_bounds(k: int, alphabet: Sequence[str]):
    if not isinstance(k, int) or k < 1:
        raise InputError({"message": f"State count must be a positive integer, got {k!r}"})
    if k > ORACLE_MAX_STATES or len(alphabet) != ORACLE_ALPHABET_SIZE:
        raise CapacityError(
            {
                "message": f"Enumeration supports at most {ORACLE_MAX_STATES} states over "
                f"{ORACLE_ALPHABET_SIZE} symbols, got k={k} over {len(alphabet)}"
            }
        )


def _transition_tables(k: int, arity: int) -> Iterator[Tuple[int, ...]]:
    # flat tables: entry state * arity + symbol
    return itertools.product(range(k), repeat=k * arity)


def enumerate_dfas(k: int, alphabet: Sequence[str]) -> Iterator[Dfa]:
    """
    All complete DFAs with exactly k states and initial state 0, in canonical
    order: transition tables lexicographically, then accepting sets by bitmask.
    """
    _check_oracle_bounds(k, alphabet)
    arity = len(alphabet)
    for flat in _transition_tables(k, arity):
        table = [flat[state * arity:(state + 1) * arity] for state in range(k)]
        for mask in range(2 ** k):
            yield Dfa(
                state_count=k,
                transitions=table,
                initial=0,
                accepting=[s for s in range(k) if mask >> s & 1],
                alphabet=tuple(alphabet),
            )


def brute_force_oracle(sample: Sample, k: int) -> Optional[Dfa]:
    """
    Return the first DFA of ``enumerate_dfas(k, sample.alphabet)`` consistent with the sample.

    For a fixed table the first consistent accepting set is the set of states
    reached by the positive words, so each table is checked once.

    :param sample: Sample over a binary alphabet.
    :param k: Exact state count, at most ORACLE_MAX_STATES.
    :return: DFA, or None
    """
    _check_oracle_bounds(k, sample.alphabet)
    arity = len(sample.alphabet)
    encode = {symbol: i for i, symbol in enumerate(sample.alphabet)}
    positives = [[encode[s] for s in word] for word in sample.positives]
    negatives = [[encode[s] for s in word] for word in sample.negatives]

    def end(flat, word):
        state = 0
        for symbol in word:
            state = flat[state * arity + symbol]
        return state

    examined = 0
    for flat in _transition_tables(k, arity):
        examined += 1
        accepted = {end(flat, word) for word in positives}
        if any(end(flat, word) in accepted for word in negatives):
            continue
        logger.debug(f"oracle k={k}: consistent DFA at table {examined}")
        return Dfa(
            state_count=k,
            transitions=[flat[s * arity:(s + 1) * arity] for s in range(k)],
            initial=0,
            accepting=sorted(accepted),
            alphabet=sample.alphabet,
        )
    logger.debug(f"oracle k={k}: none of {examined * 2 ** k} candidates is consistent")
    return None
