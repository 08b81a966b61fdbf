import random

import pytest
from hypothesis import given, settings, strategies as st

from closedwords.closed import is_closed
from closedwords.factors import (
    FactorKind,
    closed_factors,
    closed_factors_naive,
    count_closed_factors,
    is_rich,
    new_closed_suffix,
    palindromic_factors,
    z_array,
)
from closedwords.words import WordError
from oracles import closed_set, pal_set, words

ABABA_CLOSED = {"", "a", "b", "aba", "bab", "abab", "baba", "ababa"}


def test_naive_examples():
    assert closed_factors_naive("abca").members == {"", "a", "b", "c", "abca"}
    assert closed_factors_naive("ababa").members == ABABA_CLOSED
    assert closed_factors_naive("a").members == {"", "a"}


@pytest.mark.parametrize("w, expected", [("abca", 5), ("", 1), ("ababa", 8), ("aaaa", 5)])
def test_counts(w, expected):
    assert count_closed_factors(w) == expected
    assert closed_factors(w).cardinality == expected


def test_oracle_agrees_with_test_oracle():
    for w in words("ab", 9):
        assert closed_factors_naive(w).members == closed_set(w), w


def test_fast_matches_naive_exhaustive_binary():
    for w in words("ab", 11):
        fast = closed_factors(w)
        assert fast.members == closed_factors_naive(w).members, w
        assert count_closed_factors(w) == fast.cardinality


def test_fast_matches_naive_example():
    assert closed_factors("aabbaabb").members == closed_factors_naive("aabbaabb").members


@settings(max_examples=300)
@given(st.sampled_from(["ab", "abc", "abcd"]).flatmap(lambda s: st.text(alphabet=s, max_size=60)))
def test_fast_matches_naive_random(w):
    assert closed_factors(w).members == closed_factors_naive(w).members
    assert count_closed_factors(w) == len(closed_factors_naive(w))


def test_factor_set_invariants():
    rng = random.Random(3)
    for _ in range(200):
        w = "".join(rng.choice("abc") for _ in range(rng.randint(0, 25)))
        c = closed_factors(w)
        p = palindromic_factors(w)
        assert c.kind is FactorKind.CLOSED and p.kind is FactorKind.PALINDROMIC
        assert "" in c and "" in p
        assert all(is_closed(u) for u in c.members)
        assert all(u == u[::-1] for u in p.members)


def test_sorted_listing():
    assert closed_factors("ababa").sorted() == ["", "a", "b", "aba", "bab", "abab", "baba", "ababa"]


@pytest.mark.parametrize(
    "w, position, expected", [("abca", 4, "abca"), ("aaa", 2, "aa"), ("ab", 2, "b")]
)
def test_new_closed_suffix(w, position, expected):
    rec = new_closed_suffix(w, position)
    assert rec.factor == expected and rec.position == position


@pytest.mark.parametrize("position", [0, 5])
def test_new_closed_suffix_range(position):
    with pytest.raises(WordError):
        new_closed_suffix("abca", position)


def test_new_closed_suffix_is_longest_closed_ending_there():
    for w in words("abc", 6, min_len=1):
        for pos in range(1, len(w) + 1):
            rec = new_closed_suffix(w, pos)
            longest = max(
                (w[s:pos] for s in range(pos) if is_closed(w[s:pos])), key=len
            )
            assert rec.factor == longest
            assert rec.factor not in w[: pos - 1]


@given(st.text(alphabet="abc", min_size=1, max_size=30))
def test_new_closed_suffixes_distinct(w):
    records = [new_closed_suffix(w, i).factor for i in range(1, len(w) + 1)]
    assert len(set(records)) == len(w)


@pytest.mark.parametrize(
    "w, expected",
    [("ababa", {"", "a", "b", "aba", "bab", "ababa"}), ("abca", {"", "a", "b", "c"}), ("", {""})],
)
def test_palindromic_factors(w, expected):
    assert pal_set(w) == expected
    assert palindromic_factors(w).members == expected


@pytest.mark.parametrize("w, expected", [("ababa", True), ("abca", False), ("", True)])
def test_is_rich(w, expected):
    assert is_rich(w) is expected


@given(st.text(alphabet="abc", max_size=40))
def test_lower_bound_and_palindrome_bound(w):
    assert count_closed_factors(w) >= len(w) + 1
    assert len(palindromic_factors(w)) <= len(w) + 1


@given(st.text(alphabet="abc", max_size=20), st.text(alphabet="abc", max_size=20))
def test_superadditivity_and_containment(u, v):
    assert count_closed_factors(u) + count_closed_factors(v) <= count_closed_factors(u + v) + 1
    assert closed_factors(u).members <= closed_factors(u + v).members


def test_prop_rich_exhaustive():
    for w in words("ab", 11):
        c, p = closed_factors(w).members, palindromic_factors(w).members
        if c <= p:
            assert c == p and len(c) == len(w) + 1, w


def test_palindromic_binary_rich_iff_pal_closed():
    for w in words("ab", 14):
        if w == w[::-1]:
            assert is_rich(w) == (
                palindromic_factors(w).members <= closed_factors(w).members
            ), w


@given(st.text(alphabet="ab", max_size=30))
def test_z_array(w):
    z = z_array(w)
    for i in range(1, len(w)):
        k = 0
        while i + k < len(w) and w[k] == w[i + k]:
            k += 1
        assert z[i] == k
