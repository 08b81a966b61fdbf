"""Basic word functions: borders, periods, exponents, reversal, rotations.

Words are plain ``str`` values whose letters are printable, non-whitespace
ASCII characters.  The empty string is the empty word.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple


class WordError(ValueError):
    """Raised for malformed words or violated preconditions."""


class FactorSpan(NamedTuple):
    """Half-open interval ``[start, end)`` locating one occurrence of a factor."""

    start: int
    end: int


def validate_word(w: str) -> str:
    """Return ``w`` unchanged, or raise :class:`WordError` if it has a bad letter."""
    for i, ch in enumerate(w):
        if not ("!" <= ch <= "~"):
            raise WordError(f"invalid letter {ch!r} at position {i}")
    return w


def _require_nonempty(w: str) -> None:
    if not w:
        raise WordError("the empty word has no period or border")


def border_table(w: str) -> list[int]:
    """Failure function: entry ``i`` is the longest border length of ``w[:i+1]``."""
    n = len(w)
    table = [0] * n
    k = 0
    for i in range(1, n):
        while k and w[i] != w[k]:
            k = table[k - 1]
        if w[i] == w[k]:
            k += 1
        table[i] = k
    return table


def longest_border(w: str) -> str:
    _require_nonempty(w)
    return w[: border_table(w)[-1]]


def period(w: str) -> int:
    """Smallest period of a non-empty word, computed as ``|w| - |longest border|``."""
    _require_nonempty(w)
    return len(w) - border_table(w)[-1]


def exponent(w: str) -> Fraction:
    """``|w| / period(w)`` as an exact fraction."""
    return Fraction(len(w), period(w))


def reversal(w: str) -> str:
    return w[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def conjugates(w: str) -> list[str]:
    """All ``|w|`` rotations, offset 0 first; repeated rotations are kept."""
    return [w[i:] + w[:i] for i in range(len(w))]
