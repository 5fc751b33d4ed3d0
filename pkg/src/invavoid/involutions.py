"""Morphic and antimorphic involutions of a finite alphabet {0, ..., k-1}."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property, lru_cache


class Kind(enum.Enum):
    MORPHIC = "m"
    ANTIMORPHIC = "a"

    @classmethod
    def parse(cls, text: str | Kind) -> Kind:
        if isinstance(text, Kind):
            return text
        key = text.strip().lower()
        aliases = {"m": cls.MORPHIC, "morphic": cls.MORPHIC,
                   "a": cls.ANTIMORPHIC, "antimorphic": cls.ANTIMORPHIC}
        if key not in aliases:
            raise ValueError(f"unknown involution kind {text!r} (use m or a)")
        return aliases[key]


@dataclass(frozen=True)
class Involution:
    """A self-inverse letter permutation, applied letterwise (morphic) or
    letterwise followed by reversal (antimorphic)."""

    mapping: tuple[int, ...]
    kind: Kind = Kind.MORPHIC

    def __post_init__(self) -> None:
        k = len(self.mapping)
        if k < 1:
            raise ValueError("alphabet must have at least one letter")
        if sorted(self.mapping) != list(range(k)):
            raise ValueError(f"{self.mapping} is not a permutation of 0..{k - 1}")
        if any(self.mapping[b] != a for a, b in enumerate(self.mapping)):
            raise ValueError(f"{self.mapping} is not self-inverse")

    @property
    def k(self) -> int:
        return len(self.mapping)

    @cached_property
    def table(self) -> bytes:
        # 256-entry table for bytes.translate; letters >= k are caught in apply()
        return bytes(self.mapping) + bytes(range(self.k, 256))

    def is_identity(self) -> bool:
        return all(a == b for a, b in enumerate(self.mapping))

    def cycles(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in enumerate(self.mapping) if a < b]

    def __call__(self, word: bytes) -> bytes:
        return apply(self, word)

    def __str__(self) -> str:
        if self.is_identity():
            body = "id"
        else:
            sep = "," if self.k > 10 else ""
            body = "".join(f"({a}{sep}{b})" for a, b in self.cycles())
        return f"{body}/{self.kind.value}"


def apply(inv: Involution, word: bytes) -> bytes:
    if word and max(word) >= inv.k:
        raise ValueError(f"letter {max(word)} outside alphabet of size {inv.k}")
    image = bytes(word).translate(inv.table)
    if inv.kind is Kind.ANTIMORPHIC:
        return image[::-1]
    return image


@lru_cache(maxsize=None)
def _mappings(k: int) -> tuple[tuple[int, ...], ...]:
    found = []

    def extend(mapping: list[int | None]) -> None:
        try:
            a = mapping.index(None)
        except ValueError:
            found.append(tuple(mapping))
            return
        mapping[a] = a
        extend(mapping)
        for b in range(a + 1, k):
            if mapping[b] is None:
                mapping[a], mapping[b] = b, a
                extend(mapping)
                mapping[b] = None
        mapping[a] = None

    extend([None] * k)
    return tuple(sorted(found))


def enumerate_involutions(k: int, kind: Kind | str = Kind.MORPHIC) -> list[Involution]:
    """All involutions of a k-letter alphabet, in lexicographic order of
    their mapping tables (so the identity always comes first)."""
    if k < 1:
        raise ValueError(f"alphabet size must be at least 1, got {k}")
    return list(_involutions(k, Kind.parse(kind)))


@lru_cache(maxsize=None)
def _involutions(k: int, kind: Kind) -> tuple[Involution, ...]:
    return tuple(Involution(m, kind) for m in _mappings(k))


def parse_involution(text: str, k: int, kind: Kind | str | None = None) -> Involution:
    """Parse cycle notation such as ``id``, ``(01)``, ``(01)(23)/a`` or ``(10,11)``.

    A ``/m`` or ``/a`` suffix sets the kind unless ``kind`` is given.
    """
    body, _, suffix = text.strip().partition("/")
    if kind is None:
        kind = Kind.parse(suffix) if suffix else Kind.MORPHIC
    mapping = list(range(k))
    body = body.strip()
    if body.lower() not in ("", "id"):
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"malformed involution {text!r}")
        for cycle in body[1:-1].split(")("):
            parts = cycle.split(",") if "," in cycle else list(cycle)
            try:
                a, b = (int(x) for x in parts)
            except ValueError:
                raise ValueError(f"malformed cycle ({cycle}) in {text!r}") from None
            if not (0 <= a < k and 0 <= b < k) or a == b:
                raise ValueError(f"bad transposition ({cycle}) for alphabet size {k}")
            if mapping[a] != a or mapping[b] != b:
                raise ValueError(f"letter reused in {text!r}")
            mapping[a], mapping[b] = b, a
    return Involution(tuple(mapping), Kind.parse(kind))
