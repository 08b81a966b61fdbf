"""CR-poor, rich and bitonic classification.

A word of length ``n`` always has at least ``n + 1`` distinct closed factors;
it is CR-poor when it has exactly that many.  Besides the count-based test,
CR-poorness is decided by a pattern test: a word is CR-poor iff it contains no
complete return to ``xy`` for distinct letters ``x, y``, which happens iff no
such bigram occurs twice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from closedwords.closed import is_closed
from closedwords.factors import (
    closed_factors,
    count_closed_factors,
    palindromic_factors,
)
from closedwords.words import FactorSpan, WordError


@dataclass(frozen=True)
class AnalysisReport:
    word: str
    length: int
    closed_count: int
    palindromic_count: int
    is_closed_word: bool
    is_cr_poor: bool
    is_rich: bool
    is_bitonic: bool | None
    cr_poor_violation: tuple[FactorSpan, FactorSpan] | None

    def to_dict(self) -> dict[str, Any]:
        """Flat mapping with the CLI's JSON key names; ``bitonic`` dropped when undefined."""
        out: dict[str, Any] = {
            "word": self.word,
            "length": self.length,
            "closed_count": self.closed_count,
            "palindromic_count": self.palindromic_count,
            "closed": self.is_closed_word,
            "cr_poor": self.is_cr_poor,
            "rich": self.is_rich,
        }
        if self.is_bitonic is not None:
            out["bitonic"] = self.is_bitonic
        out["violation"] = (
            None
            if self.cr_poor_violation is None
            else [list(span) for span in self.cr_poor_violation]
        )
        return out


def is_cr_poor_by_count(w: str) -> bool:
    return count_closed_factors(w) == len(w) + 1


def cr_poor_violation(w: str) -> tuple[FactorSpan, FactorSpan] | None:
    """First repeated distinct-letter bigram, as (first, second) occurrence spans.

    The bigram whose second occurrence is leftmost is reported.
    """
    first_seen: dict[str, int] = {}
    for i in range(len(w) - 1):
        if w[i] == w[i + 1]:
            continue
        bigram = w[i : i + 2]
        if bigram in first_seen:
            j = first_seen[bigram]
            return FactorSpan(j, j + 2), FactorSpan(i, i + 2)
        first_seen[bigram] = i
    return None


def is_cr_poor_by_pattern(w: str) -> bool:
    return cr_poor_violation(w) is None


def _runs(w: str) -> int:
    return sum(1 for i in range(len(w)) if i == 0 or w[i] != w[i - 1])


def is_bitonic(w: str) -> bool:
    """Whether a word over at most two letters has the shape x^i y^j x^k."""
    if len(set(w)) > 2:
        raise WordError(f"bitonicity needs at most two distinct letters, got {sorted(set(w))}")
    # with two letters, runs alternate, so three runs already read x..y..x
    return _runs(w) <= 3


def sets_equal_closed_palindromic(w: str) -> bool:
    return closed_factors(w).members == palindromic_factors(w).members


def analyze(w: str) -> AnalysisReport:
    n = len(w)
    closed_count = count_closed_factors(w)
    pal_count = len(palindromic_factors(w))
    return AnalysisReport(
        word=w,
        length=n,
        closed_count=closed_count,
        palindromic_count=pal_count,
        is_closed_word=is_closed(w),
        is_cr_poor=closed_count == n + 1,
        is_rich=pal_count == n + 1,
        is_bitonic=is_bitonic(w) if len(set(w)) <= 2 else None,
        cr_poor_violation=cr_poor_violation(w),
    )


def check_unique_new_closed_suffix(w: str, x: str) -> int:
    """Number of closed suffixes of ``wx`` that are not factors of ``w``.

    Always at least 1; ``wx`` is CR-poor exactly when it equals 1.
    """
    if not is_cr_poor_by_count(w):
        raise WordError(f"{w!r} is not CR-poor")
    wx = w + x
    return sum(
        1 for start in range(len(wx)) if wx[start:] not in w and is_closed(wx[start:])
    )
