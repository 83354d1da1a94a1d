"""
    tests for params utils
"""

import pytest

from pydfacons import InputError
from pydfacons.utils.params_utils import enf_alphabet, enf_word, shortlex_key


def test_enf_word():
    assert enf_word("", "ab") == ""
    assert enf_word("abba", ("a", "b")) == "abba"

    with pytest.raises(InputError) as ex:
        enf_word("abca", "ab")
    assert ex.value.symbol == "c"
    assert ex.value.position == 2

    with pytest.raises(InputError):
        enf_word(["a"], "ab")


def test_enf_alphabet():
    assert enf_alphabet("ab") == ("a", "b")
    assert enf_alphabet(["b", "a"]) == ("b", "a")

    with pytest.raises(InputError):
        enf_alphabet("")
    with pytest.raises(InputError):
        enf_alphabet("aba")
    with pytest.raises(InputError):
        enf_alphabet(["ab", "c"])
    with pytest.raises(InputError):
        enf_alphabet(3)


def test_shortlex_key():
    words = ["bb", "a", "", "ab", "b", "aaa", "ba"]
    assert sorted(words, key=shortlex_key("ab")) == ["", "a", "b", "ab", "ba", "bb", "aaa"]
    assert sorted(words, key=shortlex_key("ba")) == ["", "b", "a", "bb", "ba", "ab", "aaa"]
