"""Distinct closed factors C(w) and palindromic factors PAL(w).

:func:`closed_factors_naive` is the definition-level oracle.  The fast path
(:func:`closed_factors`, :func:`count_closed_factors`) works one start
position at a time.  For the suffix ``s = w[i:]`` it uses the Z-array and the
border table of ``s``: a prefix ``s[:L]`` with longest border ``b > 0`` is
closed exactly when the first recurrence of ``s[:b]`` after position 0 starts
at ``L - b``.  A factor ``w[i:i+L]`` is counted only at its leftmost
occurrence, i.e. when ``L`` exceeds the longest common prefix of ``w[i:]``
with every earlier suffix, so no factor strings need to be stored in counting
mode.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from closedwords.words import WordError, border_table


class FactorKind(enum.Enum):
    CLOSED = "closed"
    PALINDROMIC = "pal"


@dataclass(frozen=True)
class FactorSet:
    members: frozenset[str]
    kind: FactorKind

    @property
    def cardinality(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: object) -> bool:
        return item in self.members

    def sorted(self) -> list[str]:
        """Members in length-then-lexicographic order (ε first)."""
        return sorted(self.members, key=lambda u: (len(u), u))


@dataclass(frozen=True)
class NewClosedSuffixRecord:
    position: int  # 1-based end position
    factor: str


def z_array(s: str) -> list[int]:
    n = len(s)
    z = [0] * n
    if n:
        z[0] = n
    left = right = 0
    for i in range(1, n):
        if i < right:
            k = min(right - i, z[i - left])
        else:
            k = 0
        while i + k < n and s[k] == s[i + k]:
            k += 1
        z[i] = k
        if i + k > right:
            left, right = i, i + k
    return z


def _closed_prefix_flags(s: str, z: list[int]) -> list[bool]:
    """``flags[L]`` tells whether ``s[:L]`` is closed, for ``0 <= L <= |s|``."""
    n = len(s)
    fail = border_table(s)
    # first[b]: leftmost shift d >= 1 where s[:b] recurs
    first = [0] * (n + 1)
    reach = 0
    for d in range(1, n):
        zd = z[d]
        if zd > reach:
            for b in range(reach + 1, zd + 1):
                first[b] = d
            reach = zd
    flags = [True] * (n + 1)
    for length in range(2, n + 1):
        b = fail[length - 1]
        flags[length] = b > 0 and first[b] == length - b
    return flags


def _scan(w: str, collect: bool):
    n = len(w)
    # seen[i]: longest prefix of w[i:] that already starts at some j < i
    seen = [0] * n
    total = 1
    members = {""} if collect else None
    for i in range(n):
        s = w[i:]
        z = z_array(s)
        for d in range(1, n - i):
            if z[d] > seen[i + d]:
                seen[i + d] = z[d]
        flags = _closed_prefix_flags(s, z)
        for length in range(seen[i] + 1, n - i + 1):
            if flags[length]:
                total += 1
                if collect:
                    members.add(s[:length])
    return total, members


def closed_factors(w: str) -> FactorSet:
    _, members = _scan(w, collect=True)
    return FactorSet(frozenset(members), FactorKind.CLOSED)


def count_closed_factors(w: str) -> int:
    """|C(w)| including ε, without materializing the factors."""
    return _scan(w, collect=False)[0]


def _is_closed_by_definition(u: str) -> bool:
    # oracle: direct occurrence counting over every candidate v != u
    n = len(u)
    if n == 0:
        return True
    for b in range(n):
        v = u[:b]
        if not u.endswith(v):
            continue
        starts = [j for j in range(n - b + 1) if u[j : j + b] == v]
        if starts == [0, n - b]:
            return True
    return False


def all_factors(w: str) -> set[str]:
    n = len(w)
    return {w[i:j] for i in range(n + 1) for j in range(i, n + 1)}


def closed_factors_naive(w: str) -> FactorSet:
    members = frozenset(u for u in all_factors(w) if _is_closed_by_definition(u))
    return FactorSet(members, FactorKind.CLOSED)


def new_closed_suffix(w: str, position: int) -> NewClosedSuffixRecord:
    """Longest closed factor ending at ``position`` (1-based) and never earlier."""
    if not 1 <= position <= len(w):
        raise WordError(f"position must lie in 1..{len(w)}, got {position}")
    prefix = w[:position]
    earlier = w[: position - 1]
    for start in range(position):
        u = prefix[start:]
        if u not in earlier and _is_closed_by_definition(u):
            return NewClosedSuffixRecord(position, u)
    raise AssertionError("the last letter alone is always a new closed factor")


def palindromic_factors(w: str) -> FactorSet:
    members = frozenset(u for u in all_factors(w) if u == u[::-1])
    return FactorSet(members, FactorKind.PALINDROMIC)


def is_rich(w: str) -> bool:
    return len(palindromic_factors(w)) == len(w) + 1
