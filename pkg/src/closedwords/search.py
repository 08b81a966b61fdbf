"""Exhaustive and constructive searches over words.

* CR-poor enumeration, checked against ``n^2 - n + 2`` in the binary case;
* maximum number of closed factors over binary words of each length;
* the quadratic family ``a^k b^k a^k b^k a^(n-4k)``;
* the bounded claim that ``a^n b^m a^k`` (``m >= 1``) is closed iff ``n == k``.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from closedwords.closed import is_closed
from closedwords.factors import closed_factors_naive, count_closed_factors
from closedwords.words import WordError, conjugates

log = logging.getLogger(__name__)

MAX_TABLE_N = 24
MAX_PROFILE_N = 512


@dataclass(frozen=True)
class MaxSearchRow:
    n: int
    max_count: int
    witness: str


@dataclass(frozen=True)
class QuadraticWitness:
    n: int
    k: int
    word: str
    guaranteed_lower_bound: int


def enumerate_cr_poor(n: int, alphabet: Iterable[str] = "ab") -> list[str]:
    """All CR-poor words of length ``n`` over ``alphabet``, lexicographically.

    Depth-first with pruning: CR-poor words are closed under taking factors,
    so a prefix with a repeated distinct-letter bigram is never extended.
    """
    letters = sorted(set(alphabet))
    if n < 0:
        raise WordError("n must be non-negative")
    if not letters:
        raise WordError("alphabet must be non-empty")
    out: list[str] = []

    def extend(prefix: list[str], bigrams: set[str]) -> None:
        if len(prefix) == n:
            out.append("".join(prefix))
            return
        for x in letters:
            if prefix and prefix[-1] != x:
                bigram = prefix[-1] + x
                if bigram in bigrams:
                    continue
                bigrams.add(bigram)
                prefix.append(x)
                extend(prefix, bigrams)
                prefix.pop()
                bigrams.discard(bigram)
            else:
                prefix.append(x)
                extend(prefix, bigrams)
                prefix.pop()

    extend([], set())
    return out


def bitonic_words(n: int, a: str = "a", b: str = "b") -> set[str]:
    """Rotations of every ``a^i b^(n-i)``."""
    return {c for i in range(n + 1) for c in conjugates(a * i + b * (n - i))} | (
        {""} if n == 0 else set()
    )


def cr_poor_count_formula(n: int) -> int:
    return n * n - n + 2


def _decode(mask: int, n: int) -> str:
    return "".join("ab"[(mask >> (n - 1 - i)) & 1] for i in range(n))


def _search_chunk(args: tuple[int, int, int]) -> tuple[int, int]:
    from closedwords import _kernel

    n, lo, hi = args
    best, mask = _kernel.search_range(n, lo, hi)
    return int(best), int(mask)


def _search_length(n: int, use_symmetry: bool, jobs: int) -> tuple[int, int]:
    # complementing letters preserves the count and the least witness starts with a
    hi = 1 << (n - 1) if use_symmetry else 1 << n
    if jobs <= 1:
        return _search_chunk((n, 0, hi))
    pieces = jobs * 4
    bounds = [hi * p // pieces for p in range(pieces + 1)]
    chunks = [(n, bounds[p], bounds[p + 1]) for p in range(pieces) if bounds[p] < bounds[p + 1]]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_search_chunk, chunks))
    best = max(r[0] for r in results)
    return best, min(mask for count, mask in results if count == best)


def max_closed_table(
    n_max: int, use_symmetry: bool = True, jobs: int = 1
) -> list[MaxSearchRow]:
    """Exact maximum of |C(w)| over binary words of each length ``1..n_max``.

    The witness is the lexicographically least maximizer.  Each witness is
    recounted independently: by the naive oracle up to length 12, by the
    pure-Python counter above that.
    """
    if not 1 <= n_max <= MAX_TABLE_N:
        raise WordError(f"n_max must lie in 1..{MAX_TABLE_N}, got {n_max}")
    rows = []
    for n in range(1, n_max + 1):
        best, mask = _search_length(n, use_symmetry, jobs)
        witness = _decode(mask, n)
        if n <= 12:
            recount = len(closed_factors_naive(witness))
        else:
            recount = count_closed_factors(witness)
        if recount != best:
            raise AssertionError(f"n={n}: search found {best}, recount of {witness} gives {recount}")
        log.debug("n=%d max=%d witness=%s", n, best, witness)
        rows.append(MaxSearchRow(n, best, witness))
    return rows


def format_table_tsv(rows: Sequence[MaxSearchRow]) -> str:
    lines = ["n\tmax\twitness"]
    lines += [f"{r.n}\t{r.max_count}\t{r.witness}" for r in rows]
    return "\n".join(lines) + "\n"


def quadratic_witness(n: int) -> QuadraticWitness:
    if n <= 4:
        raise WordError(f"the quadratic construction needs n > 4, got {n}")
    k = n // 4
    word = "a" * k + "b" * k + "a" * k + "b" * k + "a" * (n - 4 * k)
    return QuadraticWitness(n, k, word, (k + 1) * (k + 2) // 2)


def interior_factor_pairs(k: int) -> list[tuple[int, int]]:
    """1-based ``(i, j)`` with ``1 <= i <= k-1`` and ``3k-1+i <= j <= 4k``."""
    return [(i, j) for i in range(1, k) for j in range(3 * k - 1 + i, 4 * k + 1)]


def verify_interior_factors_closed(witness: QuadraticWitness) -> bool:
    """Check the closed family ``w[i..j]`` inside the quadratic witness."""
    w, k = witness.word, witness.k
    pairs = interior_factor_pairs(k)
    factors = set()
    for i, j in pairs:
        v = w[i - 1 : j]
        if not is_closed(v):
            return False
        if j == 3 * k - 1 + i and v != "a" * (k - i + 1) + "b" * k + "a" * k + "b" * (i - 1):
            return False
        factors.add(v)
    return len(factors) == len(pairs)


def intersection_counterexamples(max_len: int) -> list[str]:
    """Words ``a^n b^m a^k`` (``m >= 1``, length <= max_len) where closed != (n == k)."""
    if max_len < 1:
        raise WordError("max_len must be positive")
    bad = []
    for total in range(1, max_len + 1):
        for m in range(1, total + 1):
            for n in range(total - m + 1):
                k = total - m - n
                u = "a" * n + "b" * m + "a" * k
                if is_closed(u) != (n == k):
                    bad.append(u)
    return bad


def verify_intersection_claim(max_len: int) -> bool:
    return not intersection_counterexamples(max_len)


def growth_profile(n_values: Iterable[int]) -> list[tuple[int, int, float]]:
    """``(n, |C(w)|, |C(w)|/n^2)`` for the quadratic witness of each length."""
    out = []
    for n in n_values:
        if not 4 < n <= MAX_PROFILE_N:
            raise WordError(f"n must lie in 5..{MAX_PROFILE_N}, got {n}")
        count = count_closed_factors(quadratic_witness(n).word)
        out.append((n, count, count / n**2))
    return out


def all_binary_words(n: int) -> Iterable[str]:
    return ("".join(t) for t in itertools.product("ab", repeat=n))
