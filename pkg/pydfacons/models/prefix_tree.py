"""
    Model for the augmented prefix tree of a sample.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from pydfacons.models.base import BaseModel


@dataclass(frozen=True)
class PrefixTree(BaseModel):
    """
    A class representing the trie of all sample prefixes.

    Nodes are numbered in breadth-first order with children in alphabet order,
    so node 0 is the empty word. ``labels`` is True for positive words, False
    for negative words and None for plain prefixes. The root has parent -1.
    """

    alphabet: Tuple[str, ...]
    words: Tuple[str, ...]
    labels: Tuple[Optional[bool], ...]
    parents: Tuple[int, ...]
    children: Tuple[Dict[str, int], ...]

    def __len__(self):
        return len(self.words)

    def edge(self, node: int) -> str:
        """Symbol on the edge entering the node."""
        return self.words[node][-1]
