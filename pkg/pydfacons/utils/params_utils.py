"""
    function's to validate parameters.
"""

from typing import Iterable, Sequence

from pydfacons.exceptions import InputError


def enf_word(word: str, alphabet: Sequence[str]) -> str:
    """
    Check every symbol of the word belongs to the alphabet.
    If it is, return the word, otherwise, raise an InputError naming the first bad symbol.
    :param word: Word to check.
    :param alphabet: Declared alphabet.
    :return: The word
    """
    if not isinstance(word, str):
        raise InputError({"message": f"Word must be a str, got {type(word).__name__}"})
    for position, symbol in enumerate(word):
        if symbol not in alphabet:
            raise InputError(
                {
                    "message": f"Symbol {symbol!r} at position {position} is not in alphabet {''.join(alphabet)}",
                    "symbol": symbol,
                    "position": position,
                }
            )
    return word


def enf_alphabet(alphabet: Iterable[str]) -> tuple:
    """
    Normalize an alphabet to a tuple of distinct single-character symbols, keeping order.
    :param alphabet: Symbols.
    :return: Alphabet tuple
    """
    try:
        symbols = tuple(alphabet)
    except TypeError:
        raise InputError({"message": "Alphabet must be an iterable of symbols"})
    if not symbols:
        raise InputError({"message": "Alphabet must not be empty"})
    if len(set(symbols)) != len(symbols):
        raise InputError({"message": f"Alphabet has repeated symbols: {symbols}"})
    for symbol in symbols:
        if not isinstance(symbol, str) or len(symbol) != 1:
            raise InputError(
                {"message": f"Alphabet symbols must be single characters, got {symbol!r}"}
            )
    return symbols


def shortlex_key(alphabet: Sequence[str]):
    """
    Build a sort key ordering words shortest-first, then lexicographically by alphabet order.
    :param alphabet: Alphabet giving the symbol order.
    :return: key function
    """
    rank = {symbol: index for index, symbol in enumerate(alphabet)}

    def key(word: str):
        return len(word), tuple(rank.get(symbol, len(rank)) for symbol in word)

    return key
