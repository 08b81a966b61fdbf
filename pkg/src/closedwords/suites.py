"""Bounded verification of the structural properties of closed factors.

Each suite returns a list of :class:`PropertyResult`, one per property.  A
property is checked exhaustively up to a length bound and on seeded random
samples where exhaustive search is out of reach.  The first counterexample
found is kept for diagnostics.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from closedwords.classify import (
    check_unique_new_closed_suffix,
    is_bitonic,
    is_cr_poor_by_count,
    is_cr_poor_by_pattern,
)
from closedwords.closed import (
    closed_by_exponent,
    closed_extension_letter,
    closed_extension_preserves_period,
    is_closed,
    is_closed_via,
    is_complete_return,
)
from closedwords.factors import (
    all_factors,
    closed_factors,
    closed_factors_naive,
    count_closed_factors,
    is_rich,
    new_closed_suffix,
    palindromic_factors,
)
from closedwords.search import (
    bitonic_words,
    cr_poor_count_formula,
    enumerate_cr_poor,
    format_table_tsv,
    growth_profile,
    intersection_counterexamples,
    max_closed_table,
    quadratic_witness,
    verify_interior_factors_closed,
)
from closedwords.words import exponent, longest_border, period

SUITES = ("characterizations", "binary-equiv", "bounds", "intersection", "table")

# published maxima of |C(w)| over binary words of length 1..20
TABLE_ONE = (2, 3, 4, 6, 8, 10, 12, 15, 18, 21, 25, 29, 33, 37, 42, 47, 52, 58, 64, 70)


@dataclass
class PropertyResult:
    name: str
    passed: bool
    checked: int
    counterexample: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = "" if self.counterexample is None else f" counterexample={self.counterexample!r}"
        return f"{status}\t{self.name}\tchecked={self.checked}{tail}"


def words_up_to(max_len: int, alphabet: str, min_len: int = 0) -> Iterator[str]:
    for n in range(min_len, max_len + 1):
        for t in itertools.product(alphabet, repeat=n):
            yield "".join(t)


def random_words(
    rng: random.Random, count: int, max_len: int, alphabets: Iterable[str]
) -> Iterator[str]:
    alphabets = list(alphabets)
    for _ in range(count):
        sigma = rng.choice(alphabets)
        yield "".join(rng.choice(sigma) for _ in range(rng.randint(0, max_len)))


def check(name: str, cases: Iterable, predicate: Callable[..., bool]) -> PropertyResult:
    """Evaluate ``predicate`` on every case, stopping at the first failure."""
    checked = 0
    for case in cases:
        checked += 1
        ok = predicate(*case) if isinstance(case, tuple) else predicate(case)
        if not ok:
            return PropertyResult(name, False, checked, repr(case))
    return PropertyResult(name, True, checked)


# closed-analysis properties


def _all_characterizations_agree(w: str) -> bool:
    expected = is_closed(w)
    return all(is_closed_via(w, i).is_closed == expected for i in range(1, 8))


def _unique_extension(w: str, sigma: str) -> bool:
    try:
        closed_extension_letter(w, sigma)
    except AssertionError:
        return False
    return sum(is_closed(w + x) for x in sigma) <= 1


def _period_criterion(w: str) -> bool:
    return all(closed_extension_preserves_period(w, x) == is_closed(w + x) for x in "ab")


def _complete_return_consistency(w: str) -> bool:
    border = longest_border(w)
    if border:
        expected = is_complete_return(w, border)
    else:
        expected = len(w) == 1
    return is_closed(w) == expected


def exponent_realizable(p: int, q: int, max_len: int | None = None) -> str | None:
    """Shortest closed binary word of exponent ``p/q`` (searching up to ``max_len``)."""
    target = Fraction(p, q)
    limit = max_len if max_len is not None else target.numerator
    for w in words_up_to(limit, "ab", min_len=1):
        if exponent(w) == target and is_closed(w):
            return w
    return None


def two_b_construction(p: int, q: int) -> str:
    """Closed word ``a^(p-q-1) b a^(q-1) b`` of length ``p`` and period ``q``."""
    return "a" * (p - q - 1) + "b" + "a" * (q - 1) + "b"


def characterizations_suite(max_len: int = 14, seed: int = 0, samples: int = 2000) -> list[PropertyResult]:
    rng = random.Random(seed)
    binary = list(words_up_to(max_len, "ab", min_len=1))
    ternary_sample = [w for w in random_words(rng, samples, 16, ["abc"]) if w]
    small = min(max_len, 12)
    fractions = sorted(
        {Fraction(p, q) for p in range(2, 13) for q in range(1, p) if 1 < Fraction(p, q) < 2}
    )
    return [
        check("seven characterizations agree (binary)", binary, _all_characterizations_agree),
        check("seven characterizations agree (ternary sample)", ternary_sample, _all_characterizations_agree),
        check("closedness invariant under reversal", binary + ternary_sample,
              lambda w: is_closed(w) == is_closed(w[::-1])),
        check("exponent >= 2 implies closed", binary,
              lambda w: not closed_by_exponent(w) or is_closed(w)),
        check("every exponent in (1,2) with numerator <= 12 realized",
              [(f.numerator, f.denominator) for f in fractions],
              lambda p, q: exponent_realizable(p, q) is not None
              and is_closed(two_b_construction(p, q))
              and exponent(two_b_construction(p, q)) == Fraction(p, q)),
        check("at most one closed one-letter extension (binary)",
              [(w, "ab") for w in words_up_to(small, "ab", min_len=1)], _unique_extension),
        check("at most one closed one-letter extension (ternary)",
              [(w, "abc") for w in words_up_to(min(max_len, 8), "abc", min_len=1)], _unique_extension),
        check("closed extension iff period kept",
              [w for w in words_up_to(small, "ab", min_len=1) if is_closed(w)], _period_criterion),
        check("closed iff complete return to longest border", binary, _complete_return_consistency),
    ]


# classifier properties


def _five_way(w: str) -> bool:
    c = closed_factors(w).members
    p = palindromic_factors(w).members
    verdicts = {is_cr_poor_by_count(w), is_cr_poor_by_pattern(w), c <= p, c == p, is_bitonic(w)}
    return len(verdicts) == 1


def _factorial(w: str) -> bool:
    return all(is_cr_poor_by_pattern(u) and is_cr_poor_by_count(u) for u in all_factors(w))


def _power_single(w: str) -> bool:
    for u in closed_factors(w).members:
        if u and len(set(longest_border(u))) > 1:
            return False
    return True


def _rich_poor(w: str) -> bool:
    return (closed_factors(w).members == palindromic_factors(w).members) == (
        is_rich(w) and is_cr_poor_by_count(w)
    )


def _extendible(w: str) -> bool:
    return any(is_cr_poor_by_pattern(x + w + y) for x in "ab" for y in "ab")


def _tech(w: str) -> bool:
    for x in "ab":
        count = check_unique_new_closed_suffix(w, x)
        if count < 1 or (count == 1) != is_cr_poor_by_count(w + x):
            return False
    return True


def _buc(w: str) -> bool:
    return is_rich(w) == (palindromic_factors(w).members <= closed_factors(w).members)


def _rich_prop(w: str) -> bool:
    c = closed_factors(w).members
    p = palindromic_factors(w).members
    return not c <= p or (c == p and len(c) == len(w) + 1)


def binary_equiv_suite(
    max_len: int = 14, seed: int = 0, samples: int = 500, bitonic_len: int = 16
) -> list[PropertyResult]:
    rng = random.Random(seed)
    binary = list(words_up_to(max_len, "ab"))
    small = [w for w in binary if len(w) <= min(max_len, 12)]
    ternary = list(words_up_to(min(max_len, 9), "abc"))
    poor_binary = [w for w in small if is_cr_poor_by_pattern(w)]
    poor_ternary_sample = [
        w for w in random_words(rng, samples * 4, 14, ["abc"]) if is_cr_poor_by_pattern(w)
    ][:samples]
    palindromes = [w for w in binary if w == w[::-1]]
    bitonic = sorted(set().union(*(bitonic_words(n) for n in range(bitonic_len + 1))))
    return [
        check("five-way CR-poor equivalence (binary)", binary, _five_way),
        check("count-based = pattern-based CR-poor (binary)", binary,
              lambda w: is_cr_poor_by_count(w) == is_cr_poor_by_pattern(w)),
        check("count-based = pattern-based CR-poor (ternary)", ternary,
              lambda w: is_cr_poor_by_count(w) == is_cr_poor_by_pattern(w)),
        check("factors of CR-poor words are CR-poor (binary)", poor_binary, _factorial),
        check("factors of CR-poor words are CR-poor (ternary sample)", poor_ternary_sample, _factorial),
        check("CR-poor invariant under reversal", binary + ternary,
              lambda w: is_cr_poor_by_pattern(w) == is_cr_poor_by_pattern(w[::-1])
              and is_cr_poor_by_count(w) == is_cr_poor_by_count(w[::-1])),
        check("closed factors of CR-poor words return to a letter power",
              poor_binary + [w for w in ternary if is_cr_poor_by_pattern(w)], _power_single),
        check("C = PAL iff rich and CR-poor", small + ternary, _rich_poor),
        check("C subset of PAL implies equality with n+1 members", small, _rich_prop),
        check("palindrome rich iff PAL subset of C", palindromes, _buc),
        check("bitonic words have only palindromic closed factors", bitonic,
              lambda w: closed_factors(w).members <= palindromic_factors(w).members),
        check("binary CR-poor words extend on both sides", poor_binary, _extendible),
        check("one-letter extension CR-poor iff unique new closed suffix", poor_binary, _tech),
    ]


# factor-index and quadratic-growth properties


def _positions_distinct(w: str) -> bool:
    records = [new_closed_suffix(w, i).factor for i in range(1, len(w) + 1)]
    return len(set(records)) == len(records)


def bounds_suite(
    max_len: int = 14,
    seed: int = 0,
    samples: int = 10_000,
    pair_samples: int = 100_000,
    profile: Iterable[int] = (*range(5, 65), 128, 256, 512),
) -> list[PropertyResult]:
    rng = random.Random(seed)
    binary = list(words_up_to(max_len, "ab"))
    ternary = list(random_words(rng, samples, 40, ["abc"]))
    mixed = list(random_words(rng, samples, 60, ["ab", "abc", "abcd"]))
    pairs = [
        (u, v)
        for u, v in zip(
            random_words(rng, pair_samples, 20, ["ab", "abc"]),
            random_words(rng, pair_samples, 20, ["ab", "abc"]),
        )
    ]
    oracle_binary = [w for w in binary if len(w) <= 12]
    profile = list(profile)
    rows = growth_profile(profile)
    large = [r for r in rows if r[0] >= 128]
    results = [
        check("at least n+1 closed factors (binary)", binary,
              lambda w: count_closed_factors(w) >= len(w) + 1),
        check("at least n+1 closed factors (ternary sample)", ternary,
              lambda w: count_closed_factors(w) >= len(w) + 1),
        check("|C(u)| + |C(v)| <= |C(uv)| + 1", pairs,
              lambda u, v: count_closed_factors(u) + count_closed_factors(v)
              <= count_closed_factors(u + v) + 1),
        check("C(u) contained in C(uv)", pairs[: max(1, pair_samples // 100)],
              lambda u, v: closed_factors(u).members <= closed_factors(u + v).members),
        check("fast closed factors match oracle (binary)", oracle_binary,
              lambda w: closed_factors(w).members == closed_factors_naive(w).members),
        check("fast closed factors match oracle (random)", mixed,
              lambda w: closed_factors(w).members == closed_factors_naive(w).members),
        check("counting mode matches set size", oracle_binary + mixed[:1000],
              lambda w: count_closed_factors(w) == len(closed_factors(w))),
        check("at most n+1 palindromic factors", binary + mixed,
              lambda w: len(palindromic_factors(w)) <= len(w) + 1),
        check("new closed factors at distinct positions are distinct",
              oracle_binary + mixed[:500], _positions_distinct),
        check("quadratic witness meets its lower bound", profile,
              lambda n: count_closed_factors(quadratic_witness(n).word)
              >= quadratic_witness(n).guaranteed_lower_bound),
        check("quadratic witness interior factors closed and distinct", profile,
              lambda n: verify_interior_factors_closed(quadratic_witness(n))),
    ]
    if len(large) >= 2:
        ratios = [r[2] for r in large]
        results.append(PropertyResult(
            "count/n^2 within a factor 2 for large witnesses",
            max(ratios) < 2 * min(ratios),
            len(ratios),
            None if max(ratios) < 2 * min(ratios) else repr(large),
        ))
    return results


def intersection_suite(max_len: int = 18) -> list[PropertyResult]:
    bad = intersection_counterexamples(max_len)
    checked = sum(
        1 for total in range(1, max_len + 1) for m in range(1, total + 1) for _ in range(total - m + 1)
    )
    return [
        PropertyResult(
            "a^n b^m a^k (m >= 1) closed iff n == k",
            not bad,
            checked,
            bad[0] if bad else None,
        )
    ]


def table_suite(max_len: int = 20, jobs: int = 1, symmetry_len: int = 12) -> list[PropertyResult]:
    rows = max_closed_table(max_len, jobs=jobs)
    results = []
    published = TABLE_ONE[: min(max_len, len(TABLE_ONE))]
    mismatch = [(r.n, r.max_count, p) for r, p in zip(rows, published) if r.max_count != p]
    results.append(PropertyResult(
        "maxima match the published table",
        not mismatch,
        len(published),
        None if not mismatch else "(n, computed, published) " + repr(mismatch),
    ))
    counts = [r.max_count for r in rows]
    results.append(check("maxima nondecreasing", list(zip(counts, counts[1:])), lambda a, b: a <= b))
    results.append(check("witness recount matches", rows,
                         lambda r: count_closed_factors(r.witness) == r.max_count))
    reduced = rows[: min(symmetry_len, max_len)]
    full = max_closed_table(len(reduced), use_symmetry=False) if reduced else []
    results.append(PropertyResult(
        "symmetry reduction gives identical rows",
        format_table_tsv(reduced) == format_table_tsv(full),
        len(reduced),
    ))
    enum_n = range(1, min(max_len, 14) + 1)
    results.append(check("binary CR-poor count is n^2 - n + 2", list(enum_n),
                         lambda n: len(enumerate_cr_poor(n, "ab")) == cr_poor_count_formula(n)))
    results.append(check("binary CR-poor words are the bitonic words", list(enum_n),
                         lambda n: set(enumerate_cr_poor(n, "ab")) == bitonic_words(n)))
    results.append(check("complement and reversal preserve the count",
                         list(words_up_to(min(max_len, 12), "ab")),
                         lambda w: count_closed_factors(w)
                         == count_closed_factors(w.translate(str.maketrans("ab", "ba")))
                         == count_closed_factors(w[::-1])))
    return results


def run_suite(name: str, max_len: int | None = None, jobs: int = 1) -> list[PropertyResult]:
    """Run one named suite, or every suite for ``"all"``."""
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, max_len, jobs)]
    kwargs = {} if max_len is None else {"max_len": max_len}
    if name == "characterizations":
        return characterizations_suite(**kwargs)
    if name == "binary-equiv":
        return binary_equiv_suite(**kwargs)
    if name == "bounds":
        return bounds_suite(**kwargs)
    if name == "intersection":
        return intersection_suite(**kwargs)
    if name == "table":
        return table_suite(jobs=jobs, **kwargs)
    raise ValueError(f"unknown suite {name!r}")
