from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from closedwords.words import (
    WordError,
    border_table,
    conjugates,
    exponent,
    is_palindrome,
    longest_border,
    period,
    reversal,
    validate_word,
)
from oracles import border_table_by_definition, period_by_shifts, words

small_words = st.text(alphabet="abc", max_size=14)
nonempty = st.text(alphabet="abc", min_size=1, max_size=14)


@pytest.mark.parametrize(
    "w, expected", [("aaa", [0, 1, 2]), ("", []), ("ababa", [0, 0, 1, 2, 3])]
)
def test_border_table_examples(w, expected):
    assert border_table_by_definition(w) == expected
    assert border_table(w) == expected


def test_border_table_matches_definition_exhaustively():
    for w in words("ab", 12):
        assert border_table(w) == border_table_by_definition(w), w


@given(small_words)
def test_border_table_shape(w):
    t = border_table(w)
    assert len(t) == len(w)
    if t:
        assert t[0] == 0
    for i in range(1, len(t)):
        assert t[i] < i + 1
        assert t[i] <= t[i - 1] + 1


@pytest.mark.parametrize("w, expected", [("ababa", "aba"), ("abc", ""), ("ccabcc", "cc")])
def test_longest_border(w, expected):
    assert longest_border(w) == expected


@pytest.mark.parametrize("w, expected", [("ababa", 2), ("a", 1), ("abca", 3)])
def test_period_examples(w, expected):
    assert period_by_shifts(w) == expected
    assert period(w) == expected


@given(nonempty)
def test_period_matches_shift_definition(w):
    p = period(w)
    assert p == period_by_shifts(w)
    assert 1 <= p <= len(w)
    assert exponent(w) >= 1


@pytest.mark.parametrize(
    "w, expected", [("abab", Fraction(2)), ("a", Fraction(1)), ("ababa", Fraction(5, 2))]
)
def test_exponent(w, expected):
    assert exponent(w) == expected


@pytest.mark.parametrize("fn", [longest_border, period, exponent])
def test_empty_word_rejected(fn):
    with pytest.raises(WordError):
        fn("")


@pytest.mark.parametrize("w, expected", [("abca", "acba"), ("", ""), ("aba", "aba")])
def test_reversal(w, expected):
    assert reversal(w) == expected


@given(small_words)
def test_reversal_involution(w):
    assert reversal(reversal(w)) == w


@pytest.mark.parametrize("w, expected", [("", True), ("aba", True), ("abca", False)])
def test_is_palindrome(w, expected):
    assert is_palindrome(w) is expected


@pytest.mark.parametrize(
    "w, expected", [("aab", ["aab", "aba", "baa"]), ("aa", ["aa", "aa"]), ("", [])]
)
def test_conjugates(w, expected):
    assert conjugates(w) == expected


@given(nonempty, st.integers(min_value=0, max_value=20))
def test_conjugates_rotation_invariant(w, shift):
    k = shift % len(w)
    assert sorted(conjugates(w[k:] + w[:k])) == sorted(conjugates(w))


def test_validate_word():
    assert validate_word("ab!~") == "ab!~"
    assert validate_word("") == ""
    for bad in ("a b", "a\tb", "é", "a\n"):
        with pytest.raises(WordError):
            validate_word(bad)
