"""Prefixes of the Thue-Morse word and the binary words built from it.

Words are ``bytes`` objects whose items are the letters 0 and 1 (not the
ASCII digits).  Use :func:`to_text` / :func:`from_text` at I/O boundaries.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class WordKind(enum.Enum):
    THUE_MORSE = "tm"
    W = "w"
    V = "v"
    U = "u"
    PERIODIC = "periodic"


def tm_bit(i: int) -> int:
    """Return t_i, the parity of the number of 1-bits of ``i``."""
    if i < 0:
        raise ValueError(f"index must be nonnegative, got {i}")
    return bin(i).count("1") & 1


def tm_by_iteration(n: int) -> bytes:
    """Length-``n`` prefix of t obtained by iterating 0 -> 01, 1 -> 10.

    Kept separate from :func:`tm_bit` so the two can be checked against
    each other.
    """
    word = b"\x00"
    image = {0: b"\x00\x01", 1: b"\x01\x00"}
    while len(word) < n:
        word = b"".join(image[a] for a in word)
    return word[:n]


def _block(kind: WordKind, t: int) -> bytes:
    if kind is WordKind.W:
        return b"\x00\x00" + b"\x01" * (t + 2)
    if kind is WordKind.V:
        return b"\x00" + b"\x01" * (2 * t + 1)
    if kind is WordKind.U:
        return b"\x00" + b"\x01" * (t + 2)
    raise ValueError(f"{kind} is not a block word")


@dataclass
class WordStream:
    """Memoized prefix of one of the infinite binary words.

    ``base`` is only used (and required) for ``WordKind.PERIODIC``.
    """

    kind: WordKind
    base: bytes = b""
    _letters: bytearray = field(default_factory=bytearray, repr=False)
    _blocks: int = field(default=0, repr=False)

    def __post_init__(self) -> None:
        if self.kind is WordKind.PERIODIC:
            if not self.base:
                raise ValueError("periodic word needs a nonempty base")
            if any(a > 1 for a in self.base):
                raise ValueError("periodic base must be binary")

    def _grow(self, n: int) -> None:
        letters = self._letters
        if self.kind is WordKind.THUE_MORSE:
            letters.extend(tm_bit(i) for i in range(len(letters), n))
        elif self.kind is WordKind.PERIODIC:
            reps = -(-n // len(self.base))
            letters[:] = self.base * reps
        else:
            while len(letters) < n:
                letters.extend(_block(self.kind, tm_bit(self._blocks)))
                self._blocks += 1

    def prefix(self, n: int) -> bytes:
        if n < 0:
            raise ValueError(f"length must be nonnegative, got {n}")
        if len(self._letters) < n:
            self._grow(n)
        return bytes(self._letters[:n])

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("infinite words have no negative indices")
        return self.prefix(i + 1)[i]

    @property
    def name(self) -> str:
        if self.kind is WordKind.PERIODIC:
            return f"periodic:{to_text(self.base)}"
        return self.kind.value


def parse_kind(text: str) -> WordStream:
    """Build a stream from a CLI name: tm, w, v, u or periodic:<base>."""
    name, _, base = text.partition(":")
    try:
        kind = WordKind(name.lower())
    except ValueError:
        raise ValueError(f"unknown word kind {text!r}") from None
    if kind is WordKind.PERIODIC:
        return WordStream(kind, from_text(base))
    if base:
        raise ValueError(f"word kind {name!r} takes no argument")
    return WordStream(kind)


def prefix(kind: WordKind | str, n: int, base: bytes | str = b"") -> bytes:
    """Length-``n`` prefix of the named infinite word."""
    if isinstance(kind, str):
        stream = parse_kind(kind)
    else:
        if isinstance(base, str):
            base = from_text(base)
        stream = WordStream(kind, base)
    return stream.prefix(n)


def to_text(word: bytes, k: int = 2) -> str:
    """Render letters as digits, or comma-separated integers when k > 10."""
    if k > 10:
        return ",".join(str(a) for a in word)
    return "".join(str(a) for a in word)


def from_text(text: str) -> bytes:
    """Parse a word written as digits or as comma-separated integers."""
    text = text.strip()
    if not text:
        return b""
    try:
        if "," in text:
            letters = [int(tok) for tok in text.split(",")]
        else:
            letters = [int(ch) for ch in text]
    except ValueError:
        raise ValueError(f"malformed word {text[:40]!r}") from None
    if any(a < 0 or a > 255 for a in letters):
        raise ValueError("letters must lie in 0..255")
    return bytes(letters)
