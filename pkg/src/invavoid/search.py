"""Exhaustive depth-first search for long words avoiding a pattern.

If every branch dies before ``max_len`` the pattern is unavoidable over the
alphabet, and the search tree is the certificate.  Otherwise the first word
of length ``max_len`` reached is returned as evidence of avoidability.
"""

from __future__ import annotations

from dataclasses import dataclass

from .detector import find_suffix_instance
from .involutions import Kind, enumerate_involutions
from .patterns import Pattern, as_pattern

DEFAULT_MAX_LEN = 200


@dataclass(frozen=True)
class Unavoidable:
    longest_avoider_len: int
    leaf_count: int
    nodes_explored: int
    # a longest avoider, lexicographically least among those visited
    longest_avoider: bytes = b""


@dataclass(frozen=True)
class AvoiderFound:
    witness: bytes
    nodes_explored: int = 0


Verdict = Unavoidable | AvoiderFound


def prove_unavoidable(p: Pattern | str, k: int, kind: Kind | str = Kind.MORPHIC,
                      max_len: int = DEFAULT_MAX_LEN, *,
                      canonical_labels: bool = True) -> Verdict:
    """Search all words over {0..k-1} that avoid ``p``.

    With ``canonical_labels`` the first letter is 0 and letter j is only
    used once j-1 has appeared; avoidance is invariant under relabeling, so
    the verdict is unchanged.  Letters are tried in increasing order, so an
    ``AvoiderFound`` witness is the lexicographically least one.

    ``nodes_explored`` counts nonempty avoiding words visited; ``leaf_count``
    counts avoiding words (the empty word included) with no avoiding
    one-letter extension.
    """
    p = as_pattern(p)
    if k < 1 or max_len < 1:
        raise ValueError("need k >= 1 and max_len >= 1")
    invs = enumerate_involutions(k, Kind.parse(kind))

    word = bytearray()
    next_letter = [0]       # next letter to try at each depth
    has_child = [False]
    top = [-1]              # largest letter used so far, per depth
    nodes = leaves = 0
    longest = 0
    longest_word = b""

    while next_letter:
        a = next_letter[-1]
        bound = min(k, top[-1] + 2) if canonical_labels else k
        if a >= bound:
            next_letter.pop()
            if not has_child.pop():
                leaves += 1
            top.pop()
            if word:
                word.pop()
            continue
        next_letter[-1] = a + 1
        word.append(a)
        if find_suffix_instance(word, p, invs) is not None:
            word.pop()
            continue
        nodes += 1
        has_child[-1] = True
        if len(word) > longest:
            longest = len(word)
            longest_word = bytes(word)
        if len(word) >= max_len:
            return AvoiderFound(bytes(word), nodes)
        next_letter.append(0)
        has_child.append(False)
        top.append(max(top[-1], a))

    return Unavoidable(longest, leaves, nodes, longest_word)


def longest_avoiding(p: Pattern | str, k: int, kind: Kind | str = Kind.MORPHIC,
                     max_len: int = DEFAULT_MAX_LEN) -> int | str:
    """Length of the longest avoider, or ``">= max_len"`` if the cap was hit."""
    verdict = prove_unavoidable(p, k, kind, max_len)
    if isinstance(verdict, AvoiderFound):
        return f">= {max_len}"
    return verdict.longest_avoider_len
