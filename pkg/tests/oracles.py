"""Slow, obviously-correct reference implementations used only by the tests.

Nothing here calls into the hashing scanner, the incremental suffix check,
or the DFS; words are plain tuples of ints and patterns plain strings over
'x' and 'G'.
"""

from __future__ import annotations

import functools
import itertools

import numpy as np
from numba import njit


def thue_morse(n):
    """Iterate 0 -> 01, 1 -> 10 on a list."""
    t = [0]
    while len(t) < n:
        t = [b for a in t for b in ((0, 1) if a == 0 else (1, 0))]
    return t[:n]


@functools.lru_cache(maxsize=None)
def involution_tables(k):
    """All self-inverse permutations of range(k) by filtering every permutation."""
    return tuple(sorted(p for p in itertools.permutations(range(k))
                        if all(p[p[a]] == a for a in range(k))))


def image(table, y, antimorphic):
    out = [table[a] for a in y]
    return out[::-1] if antimorphic else out


def naive_expand(pattern, y, table, antimorphic):
    gy = image(table, y, antimorphic)
    out = []
    for s in pattern:
        out.extend(y if s == "x" else gy)
    return out


def _is_instance(word, start, m, pattern, table, antimorphic):
    block = word[start:start + m]
    # y is the first block, or its preimage when the pattern starts with G
    y = block if pattern[0] == "x" else image(table, block, antimorphic)
    gy = image(table, y, antimorphic)
    for i, s in enumerate(pattern):
        if word[start + i * m:start + (i + 1) * m] != (y if s == "x" else gy):
            return False
    return True


def naive_find(word, pattern, antimorphic, k):
    """First (start, m, table) by brute force over every candidate."""
    word = list(word)
    n, plen = len(word), len(pattern)
    tables = involution_tables(k)
    for start in range(n):
        for m in range(1, (n - start) // plen + 1):
            for table in tables:
                if _is_instance(word, start, m, pattern, table, antimorphic):
                    return start, m, table
    return None


def naive_overlap(word):
    n = len(word)
    for start in range(n):
        for q in range(1, (n - start - 1) // 2 + 1):
            if all(word[start + j] == word[start + j + q] for j in range(q + 1)):
                return start, q
    return None


def bfs_longest_avoider(pattern, k, antimorphic, cap=64):
    """Grow every avoiding word over range(k) level by level; return the
    last nonempty level's length, or None if level ``cap`` is reached."""
    level = [()]
    length = 0
    while level and length < cap:
        nxt = [w + (a,) for w in level for a in range(k)]
        nxt = [w for w in nxt if naive_find(w, pattern, antimorphic, k) is None]
        if not nxt:
            return length
        level = nxt
        length += 1
    return None


def naive_suffix_instance(word, pattern, antimorphic, k):
    """Is some suffix of ``word`` an instance of ``pattern``?"""
    word = list(word)
    n, plen = len(word), len(pattern)
    for m in range(1, n // plen + 1):
        factor = word[n - plen * m:]
        for table in involution_tables(k):
            block = factor[:m]
            y = block if pattern[0] == "x" else image(table, block, antimorphic)
            if naive_expand(pattern, y, table, antimorphic) == factor:
                return True
    return False


# Same brute force as naive_find, compiled, for the 10^4-word equivalence run.
# Every candidate materializes y and g(y) and compares letter by letter.

@njit(cache=True)
def _naive_find_compiled(word, is_x, tables, antimorphic):
    n, plen, ntab = len(word), len(is_x), tables.shape[0]
    for start in range(n):
        for m in range(1, (n - start) // plen + 1):
            for j in range(ntab):
                table = tables[j]
                block = word[start:start + m]
                img = np.empty(m, dtype=np.int64)
                for t in range(m):
                    img[t] = table[block[m - 1 - t]] if antimorphic else table[block[t]]
                y = block.copy() if is_x[0] else img
                gy = np.empty(m, dtype=np.int64)
                for t in range(m):
                    gy[t] = table[y[m - 1 - t]] if antimorphic else table[y[t]]
                good = True
                for i in range(plen):
                    want = y if is_x[i] else gy
                    for t in range(m):
                        if word[start + i * m + t] != want[t]:
                            good = False
                            break
                    if not good:
                        break
                if good:
                    return start, m, j
    return -1, -1, -1


def naive_find_fast(word, pattern, antimorphic, k):
    tables = np.array(involution_tables(k), dtype=np.int64)
    is_x = np.array([s == "x" for s in pattern], dtype=np.bool_)
    start, m, j = _naive_find_compiled(np.array(list(word), dtype=np.int64),
                                       is_x, tables, antimorphic)
    if start < 0:
        return None
    return int(start), int(m), involution_tables(k)[j]
