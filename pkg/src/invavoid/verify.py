"""The full lemma-verification suite behind ``invavoid verify-lemmas``."""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from .detector import find_instance, find_overlap
from .involutions import Kind
from .patterns import (INFINITE, Pattern, all_patterns, canonical, classify_index,
                       format_index, parse_pattern)
from .search import AvoiderFound, Unavoidable, prove_unavoidable
from .words import parse_kind, to_text

SCHEMA = 1
DEFAULT_PREFIX_LEN = 10_000
DEFAULT_SEARCH_DEPTH = 64


@dataclass
class CheckRecord:
    name: str
    lemma: str
    word: str | None
    prefix_len: int | None
    pattern: str | None
    kind: str | None
    result: str = "fail"
    elapsed: float = 0.0
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.result == "pass"


@dataclass
class VerificationReport:
    prefix_len: int
    search_depth: int
    records: list[CheckRecord]
    classification: list[dict[str, Any]]

    @property
    def status(self) -> str:
        return "pass" if all(r.passed for r in self.records) else "fail"

    def to_dict(self, include_elapsed: bool = True) -> dict[str, Any]:
        records = []
        for r in self.records:
            d = asdict(r)
            if not include_elapsed:
                del d["elapsed"]
            records.append(d)
        return {
            "schema": SCHEMA,
            "status": self.status,
            "config": {"prefix_len": self.prefix_len, "search_depth": self.search_depth},
            "checks": records,
            "classification": self.classification,
        }

    def to_json(self, include_elapsed: bool = True) -> str:
        return json.dumps(self.to_dict(include_elapsed), indent=2)

    def to_text(self) -> str:
        header = ("check", "lemma", "word", "len", "pattern", "kind", "result", "secs")
        rows = [header]
        for r in self.records:
            rows.append((r.name, r.lemma, r.word or "-",
                         "-" if r.prefix_len is None else str(r.prefix_len),
                         r.pattern or "-", r.kind or "-", r.result, f"{r.elapsed:.2f}"))
        widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
        lines.append("")
        lines.append(f"{'pattern':<12}  A_m  A_a")
        for row in self.classification:
            lines.append(f"{row['pattern']:<12}  {row['morphic']!s:<3}  {row['antimorphic']!s}")
        lines.append("")
        lines.append(f"status: {self.status}")
        return "\n".join(lines)


# -- individual checks ----------------------------------------------------

def _occurrence_detail(word: bytes, occ) -> dict[str, Any]:
    return {"start": occ.start, "m": occ.m, "involution": str(occ.involution),
            "factor": to_text(occ.factor(word))}


def _scan_check(name: str, lemma: str, word_kind: str, pattern: str, kind: str):
    def run(prefix_len: int, search_depth: int) -> CheckRecord:
        p = parse_pattern(pattern)
        record = CheckRecord(name, lemma, word_kind, prefix_len, str(p), kind)
        word = parse_kind(word_kind).prefix(prefix_len)
        occ = find_instance(word, p, kind, k=2)
        record.result = "pass" if occ is None else "fail"
        if occ is not None:
            record.detail = _occurrence_detail(word, occ)
        return record
    run.check_name = name
    return run


def _overlap_check(prefix_len: int, search_depth: int) -> CheckRecord:
    record = CheckRecord("thue-morse-overlap-free", "Thue-Morse", "tm", prefix_len, None, None)
    ov = find_overlap(parse_kind("tm").prefix(prefix_len))
    record.result = "pass" if ov is None else "fail"
    if ov is not None:
        record.detail = {"start": ov.start, "q": ov.q}
    return record


def mixed_patterns(length: int) -> list[Pattern]:
    """Canonical representatives of patterns using both x and g(x)."""
    return sorted({canonical(p) for p in all_patterns(length) if p.count_x and p.count_gx})


def _lower_bound_check(prefix_len: int, search_depth: int) -> CheckRecord:
    record = CheckRecord("binary-unavoidability-length-3", "index 3 lower bound",
                         None, None, "all mixed length-3", "m,a")
    ok = True
    longest = {}
    for p in mixed_patterns(3):
        for kind in "ma":
            verdict = prove_unavoidable(p, 2, kind, search_depth)
            key = f"{p}/{kind}"
            if isinstance(verdict, Unavoidable):
                longest[key] = verdict.longest_avoider_len
            else:
                ok = False
                longest[key] = f">= {search_depth}"
    record.result = "pass" if ok else "fail"
    record.detail = {"longest_avoider": longest}
    return record


def classifier_consistent(p: Pattern, kind: str, depth: int) -> bool:
    """Search agrees with the classified index: unavoidable over one letter
    fewer, and an avoider of length ``depth`` over exactly that many."""
    index = classify_index(p, kind)
    if index == INFINITE:
        return all(isinstance(prove_unavoidable(p, k, kind, depth), Unavoidable)
                   for k in (2, 3))
    below = prove_unavoidable(p, index - 1, kind, depth)
    at = prove_unavoidable(p, index, kind, depth)
    return isinstance(below, Unavoidable) and isinstance(at, AvoiderFound)


def _classifier_check(prefix_len: int, search_depth: int) -> CheckRecord:
    record = CheckRecord("classifier-vs-search", "index table", None, None,
                         "all of length <= 4", "m,a")
    failures = [f"{p}/{kind}" for n in range(1, 5) for p in all_patterns(n)
                for kind in "ma" if not classifier_consistent(p, kind, search_depth)]
    record.result = "pass" if not failures else "fail"
    record.detail = {"patterns_checked": 2 * sum(2 ** n for n in range(1, 5)),
                     "failures": failures}
    return record


CHECKS: list[Callable[[int, int], CheckRecord]] = [
    _overlap_check,
    _scan_check("w-xxGx-morphic", "Lemma 1", "w", "xxGx", "m"),
    _scan_check("w-xxGx-antimorphic", "Lemma 4", "w", "xxGx", "a"),
    _scan_check("v-GxxG-morphic", "Lemma 2", "v", "GxxG", "m"),
    _scan_check("u-xxGG-morphic", "Lemma 3", "u", "xxGG", "m"),
    _scan_check("u-xGxG-morphic", "Lemma 3", "u", "xGxG", "m"),
    _scan_check("0001-xxGG-antimorphic", "Lemma 5", "periodic:0001", "xxGG", "a"),
    _scan_check("0001-xGxG-antimorphic", "Lemma 5", "periodic:0001", "xGxG", "a"),
    _scan_check("0001-GxxG-antimorphic", "Lemma 5", "periodic:0001", "GxxG", "a"),
    _scan_check("tm-xxxG-morphic", "cube factor", "tm", "xxxG", "m"),
    _scan_check("tm-xxxG-antimorphic", "cube factor", "tm", "xxxG", "a"),
    _lower_bound_check,
    _classifier_check,
]


def classification_table(max_len: int = 4) -> list[dict[str, Any]]:
    rows = []
    for n in range(1, max_len + 1):
        for p in sorted({canonical(q) for q in all_patterns(n)}):
            rows.append({"pattern": str(p),
                         "morphic": format_index(classify_index(p, Kind.MORPHIC)),
                         "antimorphic": format_index(classify_index(p, Kind.ANTIMORPHIC))})
    return rows


def thread_count() -> int:
    env = os.environ.get("INVAVOID_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_verify_lemmas(prefix_len: int = DEFAULT_PREFIX_LEN,
                      search_depth: int = DEFAULT_SEARCH_DEPTH,
                      threads: int | None = None) -> VerificationReport:
    if prefix_len < 1 or search_depth < 1:
        raise ValueError("prefix_len and search_depth must be positive")
    threads = threads or thread_count()

    def timed(check):
        t0 = time.perf_counter()
        record = check(prefix_len, search_depth)
        record.elapsed = round(time.perf_counter() - t0, 4)
        return record

    with ThreadPoolExecutor(max_workers=threads) as pool:
        records = list(pool.map(timed, CHECKS))
    return VerificationReport(prefix_len, search_depth, records, classification_table())
