"""Closedness of a single word.

A word is closed when it is empty, or when some factor ``v != w`` occurs in it
exactly twice: once as a prefix and once as a suffix.  Such a ``v`` is
necessarily the longest border, and ``w`` is then a complete return to it.

:func:`is_closed_via` evaluates the predicate through one of seven equivalent
formulations, numbered as follows:

1. some factor ``v != w`` occurs exactly twice, as prefix and as suffix;
2. the longest repeated prefix occurs only as a prefix and as a suffix;
3. the longest repeated prefix is not right special (an occurrence at the very
   end of ``w`` has no following letter and never conflicts);
4. some border has no internal occurrence;
5. the longest border has no internal occurrence;
6. ``w`` is a complete return to its longest repeated prefix;
7. ``w`` is a complete return to its longest border.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from closedwords.words import (
    FactorSpan,
    WordError,
    border_table,
    exponent,
    period,
)


@dataclass(frozen=True)
class ClosednessWitness:
    is_closed: bool
    # longest border when closed; unspecified otherwise
    frontier: str
    characterization_id: int


def occurrences(w: str, v: str) -> list[FactorSpan]:
    """All occurrences of ``v`` in ``w``, left to right (KMP scan)."""
    m = len(v)
    if m == 0:
        return [FactorSpan(i, i) for i in range(len(w) + 1)]
    table = border_table(v)
    spans = []
    k = 0
    for i, ch in enumerate(w):
        while k and ch != v[k]:
            k = table[k - 1]
        if ch == v[k]:
            k += 1
        if k == m:
            spans.append(FactorSpan(i - m + 1, i + 1))
            k = table[k - 1]
    return spans


def _starts(w: str, v: str) -> list[int]:
    return [s.start for s in occurrences(w, v)]


def _has_internal_occurrence(w: str, v: str) -> bool:
    last = len(w) - len(v)
    return any(0 < s < last for s in _starts(w, v))


def _complete_return(w: str, v: str) -> bool:
    # ε is allowed here; the public wrapper enforces |v| >= 1
    return _starts(w, v) == [0, len(w) - len(v)] and len(v) < len(w)


def _longest_border_len(w: str) -> int:
    return border_table(w)[-1]


def _longest_repeated_prefix(w: str) -> str:
    """Longest prefix of ``w`` having at least two occurrences in ``w``."""
    # w[:L] recurs iff it matches w at some shift d >= 1
    n = len(w)
    best = 0
    for d in range(1, n + 1):
        k = 0
        while d + k < n and w[k] == w[d + k]:
            k += 1
        best = max(best, k)
    return w[:best]


def _borders(w: str) -> list[int]:
    """Border lengths of ``w``, longest first, ending with 0."""
    table = border_table(w)
    out = []
    b = table[-1]
    while b:
        out.append(b)
        b = table[b - 1]
    out.append(0)
    return out


def is_closed(w: str) -> bool:
    """Closedness via the longest border having no internal occurrence."""
    if len(w) <= 1:
        return True
    b = _longest_border_len(w)
    if b == 0:
        return False
    return not _has_internal_occurrence(w, w[:b])


def _char1(w: str) -> tuple[bool, str]:
    n = len(w)
    for b in range(n):
        v = w[:b]
        if w.endswith(v) and _starts(w, v) == [0, n - b]:
            return True, v
    return False, ""


def _char2(w: str) -> tuple[bool, str]:
    v = _longest_repeated_prefix(w)
    ok = set(_starts(w, v)) <= {0, len(w) - len(v)}
    return ok, v


def _char3(w: str) -> tuple[bool, str]:
    v = _longest_repeated_prefix(w)
    followers = {w[s + len(v)] for s in _starts(w, v) if s + len(v) < len(w)}
    return len(followers) <= 1, v


def _char4(w: str) -> tuple[bool, str]:
    for b in _borders(w):
        if not _has_internal_occurrence(w, w[:b]):
            return True, w[:b]
    return False, ""


def _char5(w: str) -> tuple[bool, str]:
    v = w[: _longest_border_len(w)]
    return not _has_internal_occurrence(w, v), v


def _char6(w: str) -> tuple[bool, str]:
    v = _longest_repeated_prefix(w)
    return _complete_return(w, v), v


def _char7(w: str) -> tuple[bool, str]:
    v = w[: _longest_border_len(w)]
    return _complete_return(w, v), v


_CHARACTERIZATIONS = {
    1: _char1,
    2: _char2,
    3: _char3,
    4: _char4,
    5: _char5,
    6: _char6,
    7: _char7,
}


def is_closed_via(w: str, characterization_id: int) -> ClosednessWitness:
    """Decide closedness of a non-empty word through one fixed formulation."""
    if characterization_id not in _CHARACTERIZATIONS:
        raise WordError(f"characterization id must be in 1..7, got {characterization_id}")
    if not w:
        raise WordError("characterizations apply to non-empty words only")
    verdict, frontier = _CHARACTERIZATIONS[characterization_id](w)
    return ClosednessWitness(verdict, frontier, characterization_id)


def is_complete_return(w: str, v: str) -> bool:
    """True iff ``v`` occurs in ``w`` exactly twice, as prefix and as suffix."""
    if not v or len(v) >= len(w):
        raise WordError("need 1 <= |v| < |w|")
    return _complete_return(w, v)


def closed_by_exponent(w: str) -> bool:
    """Sufficient test for closedness: exponent at least 2."""
    return exponent(w) >= 2


def closed_extension_letter(w: str, alphabet: Iterable[str]) -> str | None:
    """The unique letter ``x`` of ``alphabet`` making ``wx`` closed, if any."""
    letters = sorted(set(alphabet))
    if not w:
        raise WordError("w must be non-empty")
    if not letters:
        raise WordError("alphabet must be non-empty")
    if not set(w) <= set(letters):
        raise WordError("alphabet must contain every letter of w")
    found = [x for x in letters if is_closed(w + x)]
    if len(found) > 1:
        raise AssertionError(f"{w!r} has several closed one-letter extensions: {found}")
    return found[0] if found else None


def closed_extension_preserves_period(w: str, x: str) -> bool:
    """For closed ``w``, whether ``wx`` keeps the period of ``w``."""
    if not w or not is_closed(w):
        raise WordError(f"{w!r} must be a non-empty closed word")
    return period(w + x) == period(w)
