"""Mechanical checks of avoidance indices for unary patterns with involution."""

from .detector import (Occurrence, Overlap, avoids, expand, find_instance,
                       find_overlap, find_suffix_instance)
from .involutions import Involution, Kind, apply, enumerate_involutions, parse_involution
from .patterns import (INFINITE, EmptyPattern, Pattern, PatternError, Sym, canonical,
                       classify_index, parse_pattern, reverse_pattern, swap_symbols)
from .search import AvoiderFound, Unavoidable, longest_avoiding, prove_unavoidable
from .words import WordKind, WordStream, prefix, tm_bit

__all__ = [
    "AvoiderFound", "EmptyPattern", "INFINITE", "Involution", "Kind", "Occurrence",
    "Overlap", "Pattern", "PatternError", "Sym", "Unavoidable", "WordKind", "WordStream",
    "apply", "avoids", "canonical", "classify_index", "enumerate_involutions", "expand",
    "find_instance", "find_overlap", "find_suffix_instance", "longest_avoiding",
    "parse_involution", "parse_pattern", "prefix", "prove_unavoidable", "reverse_pattern",
    "swap_symbols", "tm_bit",
]
