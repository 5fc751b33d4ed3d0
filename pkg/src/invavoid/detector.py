"""Detect morphic/antimorphic instances of a pattern, and overlaps, in a word.

An instance of a pattern p at ``start`` with block length ``m`` is a factor
made of |p| consecutive blocks of length m; blocks under ``x`` all equal some
nonempty y and blocks under ``g(x)`` all equal g(y).

Whole-word scans (:func:`find_instance`) run a compiled loop over
candidates in (start, m, involution) order, comparing blocks through a
double polynomial hash and checking every hash hit letter by letter.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numba import njit

from .involutions import Involution, Kind, apply, enumerate_involutions
from .patterns import Pattern, Sym, as_pattern

_MOD1, _MOD2 = 2147483647, 2147483629
_BASE1, _BASE2 = 911382323, 972663749


@dataclass(frozen=True)
class Occurrence:
    start: int
    m: int
    involution: Involution
    pattern: Pattern

    @property
    def length(self) -> int:
        return len(self.pattern) * self.m

    def factor(self, word: bytes) -> bytes:
        return bytes(word[self.start:self.start + self.length])

    def witness(self, word: bytes) -> bytes:
        """The word y substituted for x."""
        block = bytes(word[self.start:self.start + self.m])
        if self.pattern[0] is Sym.GX:
            return apply(self.involution, block)
        return block


@dataclass(frozen=True)
class Overlap:
    start: int
    q: int

    @property
    def length(self) -> int:
        return 2 * self.q + 1


def expand(p: Pattern | str, y: bytes, inv: Involution) -> bytes:
    p = as_pattern(p)
    if not y:
        raise ValueError("y must be nonempty")
    gy = apply(inv, y)
    return b"".join(y if s is Sym.X else gy for s in p)


def _alphabet_size(word: bytes, k: int | None) -> int:
    top = max(word) + 1 if word else 1
    if k is None:
        return max(2, top)
    if top > k:
        raise ValueError(f"word uses letter {top - 1} outside alphabet of size {k}")
    return k


def _blocks_match(word, start: int, m: int, p: Pattern, inv: Involution) -> bool:
    block0 = word[start:start + m]
    image = apply(inv, block0)
    first = p[0]
    for i in range(1, len(p)):
        block = word[start + i * m:start + (i + 1) * m]
        if block != (block0 if p[i] is first else image):
            return False
    return True


# -- compiled scan ------------------------------------------------------------

@njit(cache=True)
def _prefix_hashes(a, base, mod):
    h = np.zeros(len(a) + 1, dtype=np.int64)
    for i in range(len(a)):
        h[i + 1] = (h[i] * base + a[i]) % mod
    return h


@njit(cache=True)
def _powers(n, base, mod):
    pw = np.ones(n + 1, dtype=np.int64)
    for i in range(n):
        pw[i + 1] = pw[i] * base % mod
    return pw


@njit(cache=True)
def _window(h, pw, s, m, mod):
    return (h[s + m] - h[s] * pw[m] % mod + mod) % mod


@njit(cache=True)
def _scan(c, images, antimorphic, same):
    """First (start, m, involution row) in that order, or (-1, -1, -1).

    ``c`` holds the word's letters plus one; row j of ``images`` holds g_j
    applied letterwise to the word, reversed when ``antimorphic``, so
    g_j(c[s:s+m]) sits at offset s (or n-s-m) of that row.  Blocks are
    compared by double hash and every hit is checked letter by letter.
    """
    n = len(c)
    plen = len(same)
    ninv = images.shape[0]
    pw1 = _powers(n, _BASE1, _MOD1)
    pw2 = _powers(n, _BASE2, _MOD2)
    h1 = _prefix_hashes(c, _BASE1, _MOD1)
    h2 = _prefix_hashes(c, _BASE2, _MOD2)
    g1 = np.empty((ninv, n + 1), dtype=np.int64)
    g2 = np.empty((ninv, n + 1), dtype=np.int64)
    for j in range(ninv):
        g1[j] = _prefix_hashes(images[j], _BASE1, _MOD1)
        g2[j] = _prefix_hashes(images[j], _BASE2, _MOD2)

    for start in range(n):
        for m in range(1, (n - start) // plen + 1):
            a1 = _window(h1, pw1, start, m, _MOD1)
            a2 = _window(h2, pw2, start, m, _MOD2)
            ok = True
            for i in range(1, plen):
                if same[i]:
                    s = start + i * m
                    if (_window(h1, pw1, s, m, _MOD1) != a1
                            or _window(h2, pw2, s, m, _MOD2) != a2):
                        ok = False
                        break
            if not ok:
                continue
            gs = n - start - m if antimorphic else start
            for j in range(ninv):
                b1 = _window(g1[j], pw1, gs, m, _MOD1)
                b2 = _window(g2[j], pw2, gs, m, _MOD2)
                ok = True
                for i in range(1, plen):
                    if not same[i]:
                        s = start + i * m
                        if (_window(h1, pw1, s, m, _MOD1) != b1
                                or _window(h2, pw2, s, m, _MOD2) != b2):
                            ok = False
                            break
                if not ok:
                    continue
                for i in range(1, plen):
                    for t in range(m):
                        want = c[start + t] if same[i] else images[j, gs + t]
                        if c[start + i * m + t] != want:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    return start, m, j
    return -1, -1, -1


@lru_cache(maxsize=None)
def _letter_tables(k: int, kind: Kind) -> np.ndarray:
    """Row j maps each letter to its image under involution j, plus one."""
    return np.array([inv.mapping for inv in enumerate_involutions(k, kind)],
                    dtype=np.int64) + 1


@lru_cache(maxsize=1024)
def _same_mask(p: Pattern) -> np.ndarray:
    return np.array([s is p[0] for s in p], dtype=np.bool_)


def find_instance(word: bytes, p: Pattern | str, kind: Kind | str = Kind.MORPHIC,
                  k: int | None = None) -> Occurrence | None:
    """Least occurrence of an instance of ``p`` in ``word``, or None.

    Occurrences are ordered by (start, m, involution), involutions in
    :func:`enumerate_involutions` order over the alphabet of size ``k``
    (default: binary, or wider if the word needs it).
    """
    p = as_pattern(p)
    kind = Kind.parse(kind)
    k = _alphabet_size(word, k)
    invs = enumerate_involutions(k, kind)
    word = bytes(word)
    if len(word) < len(p):
        return None
    same = _same_mask(p)
    if same.all():
        # g never appears (or only g does): the involution is irrelevant
        invs = invs[:1]
    letters = np.frombuffer(word, dtype=np.uint8)
    images = _letter_tables(k, kind)[:len(invs), letters]
    if kind is Kind.ANTIMORPHIC:
        images = np.ascontiguousarray(images[:, ::-1])
    c = letters.astype(np.int64) + 1
    start, m, j = _scan(c, images, kind is Kind.ANTIMORPHIC, same)
    if start < 0:
        return None
    return Occurrence(int(start), int(m), invs[j], p)


def avoids(word: bytes, p: Pattern | str, kind: Kind | str = Kind.MORPHIC,
           k: int | None = None) -> bool:
    return find_instance(word, p, kind, k) is None


def find_suffix_instance(word, p: Pattern, invs: list[Involution]) -> Occurrence | None:
    """Instance of ``p`` that is a suffix of ``word``, smallest m first.

    Used for incremental checking while a word grows one letter at a time.
    """
    n, plen = len(word), len(p)
    for m in range(1, n // plen + 1):
        s = n - plen * m
        for inv in invs:
            if _blocks_match(word, s, m, p, inv):
                return Occurrence(s, m, inv, p)
    return None


def find_overlap(word: bytes) -> Overlap | None:
    """Least (start, q) with word[start+j] == word[start+j+q] for 0 <= j <= q."""
    a = np.frombuffer(bytes(word), dtype=np.uint8)
    n = len(a)
    best: Overlap | None = None
    for q in range(1, (n - 1) // 2 + 1):
        span = n - q
        if best is not None:
            if best.start == 0:
                break
            span = min(span, best.start + q + 1)
        # a run of q+1 consecutive zero mismatches starting at s < n-2q
        mismatch = np.flatnonzero(a[:span] != a[q:q + span])
        bounds = np.concatenate(([-1], mismatch, [span]))
        runs = np.diff(bounds) - 1
        hits = np.flatnonzero(runs >= q + 1)
        if len(hits):
            s = int(bounds[hits[0]]) + 1
            if s + 2 * q < n and (best is None or s < best.start):
                best = Overlap(s, q)
    return best


def involutions_for(word: bytes, kind: Kind | str, k: int | None = None) -> list[Involution]:
    return enumerate_involutions(_alphabet_size(word, k), kind)
