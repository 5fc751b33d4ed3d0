"""Unary patterns with involution and their avoidance indices.

A pattern is a nonempty word over the two symbols ``x`` and ``g(x)``.
Compact syntax writes ``g(x)`` as ``G``, so ``xxg(x)x`` and ``xxGx`` are the
same pattern.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .involutions import Kind

INFINITE = math.inf


class Sym(enum.IntEnum):
    X = 0
    GX = 1


class PatternError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class EmptyPattern(PatternError):
    def __init__(self) -> None:
        super().__init__("empty pattern", 0)


@dataclass(frozen=True, order=True)
class Pattern:
    symbols: tuple[Sym, ...]

    def __post_init__(self) -> None:
        if not self.symbols:
            raise EmptyPattern()

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i: int) -> Sym:
        return self.symbols[i]

    @property
    def count_x(self) -> int:
        return self.symbols.count(Sym.X)

    @property
    def count_gx(self) -> int:
        return self.symbols.count(Sym.GX)

    def compact(self) -> str:
        return "".join("x" if s is Sym.X else "G" for s in self.symbols)

    def __str__(self) -> str:
        return "".join("x" if s is Sym.X else "g(x)" for s in self.symbols)

    @classmethod
    def of(cls, symbols) -> Pattern:
        return cls(tuple(Sym(s) for s in symbols))


@lru_cache(maxsize=1024)
def parse_pattern(text: str) -> Pattern:
    """Parse ``x``/``X`` as x and ``G`` or ``g(x)`` as g(x)."""
    if not text:
        raise EmptyPattern()
    symbols = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "xX":
            symbols.append(Sym.X)
            i += 1
        elif text[i:i + 4].lower() == "g(x)":
            symbols.append(Sym.GX)
            i += 4
        elif ch == "G":
            symbols.append(Sym.GX)
            i += 1
        else:
            raise PatternError(f"unrecognized token {text[i:i + 4]!r}", i)
    return Pattern(tuple(symbols))


def as_pattern(p: Pattern | str) -> Pattern:
    return p if isinstance(p, Pattern) else parse_pattern(p)


def swap_symbols(p: Pattern) -> Pattern:
    return Pattern(tuple(Sym(1 - s) for s in p.symbols))


def reverse_pattern(p: Pattern) -> Pattern:
    return Pattern(p.symbols[::-1])


def orbit(p: Pattern) -> set[Pattern]:
    r = reverse_pattern(p)
    return {p, r, swap_symbols(p), swap_symbols(r)}


def canonical(p: Pattern) -> Pattern:
    """Least member (X < GX) of the orbit under swap and reversal."""
    return min(orbit(p))


def all_patterns(length: int) -> list[Pattern]:
    return [Pattern(s) for s in itertools.product(Sym, repeat=length)]


def classify_index(p: Pattern | str, kind: Kind | str = Kind.MORPHIC) -> float | int:
    """Avoidance index of ``p``; the result does not depend on ``kind``.

    Returns an int >= 2, or ``INFINITE``.  Patterns using a single symbol get
    the classical indices of x^n (x: unavoidable, xx: 3, x^n for n >= 3: 2).
    """
    p = as_pattern(p)
    Kind.parse(kind)
    n = len(p)
    if p.count_x == 0 or p.count_gx == 0:
        return {1: INFINITE, 2: 3}.get(n, 2)
    if n == 2:
        return INFINITE
    if n == 3:
        return 3
    return 2


def format_index(index: float | int) -> str | int:
    return "inf" if index == INFINITE else int(index)
