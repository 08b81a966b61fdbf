"""Compiled closed-factor counter for the exhaustive binary search.

Same algorithm as :func:`closedwords.factors.count_closed_factors`, over
``uint8`` arrays with caller-owned scratch buffers.  Words are bitmasks whose
most significant bit is position 0 and bit value 0 is the letter ``a``, so
increasing masks are increasing words in lexicographic order.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def count_closed(w, n, z, fail, first, seen):
    for i in range(n):
        seen[i] = 0
    total = 1
    for i in range(n):
        m = n - i
        # Z-array of w[i:]
        z[0] = m
        left = 0
        right = 0
        for d in range(1, m):
            k = 0
            if d < right:
                k = min(right - d, z[d - left])
            while d + k < m and w[i + k] == w[i + d + k]:
                k += 1
            z[d] = k
            if d + k > right:
                left = d
                right = d + k
            if k > seen[i + d]:
                seen[i + d] = k
        # border table of w[i:]
        fail[0] = 0
        k = 0
        for j in range(1, m):
            while k > 0 and w[i + j] != w[i + k]:
                k = fail[k - 1]
            if w[i + j] == w[i + k]:
                k += 1
            fail[j] = k
        reach = 0
        for d in range(1, m):
            if z[d] > reach:
                for b in range(reach + 1, z[d] + 1):
                    first[b] = d
                reach = z[d]
        for length in range(seen[i] + 1, m + 1):
            if length == 1:
                total += 1
            else:
                b = fail[length - 1]
                if b > 0 and first[b] == length - b:
                    total += 1
    return total


@njit(cache=True)
def decode(mask, n, w):
    for i in range(n):
        w[i] = (mask >> (n - 1 - i)) & 1


@njit(cache=True)
def search_range(n, lo, hi):
    """Max count over masks in ``[lo, hi)`` and the smallest mask attaining it."""
    w = np.zeros(n, dtype=np.uint8)
    z = np.zeros(n + 1, dtype=np.int64)
    fail = np.zeros(n + 1, dtype=np.int64)
    first = np.zeros(n + 1, dtype=np.int64)
    seen = np.zeros(n + 1, dtype=np.int64)
    best = -1
    best_mask = -1
    for mask in range(lo, hi):
        decode(mask, n, w)
        c = count_closed(w, n, z, fail, first, seen)
        if c > best:
            best = c
            best_mask = mask
    return best, best_mask


@njit(cache=True)
def count_all(n, lo, hi, out):
    """Counts for every mask in ``[lo, hi)``, written to ``out``."""
    w = np.zeros(n, dtype=np.uint8)
    z = np.zeros(n + 1, dtype=np.int64)
    fail = np.zeros(n + 1, dtype=np.int64)
    first = np.zeros(n + 1, dtype=np.int64)
    seen = np.zeros(n + 1, dtype=np.int64)
    for mask in range(lo, hi):
        decode(mask, n, w)
        out[mask - lo] = count_closed(w, n, z, fail, first, seen)
