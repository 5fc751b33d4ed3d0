"""Command-line interface: ``invavoid <subcommand> ...``.

Exit codes: 0 success, 1 failed check (or an instance found under
``--expect-avoid``), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .detector import expand, find_instance
from .involutions import Kind, enumerate_involutions, parse_involution
from .patterns import classify_index, format_index, parse_pattern
from .search import AvoiderFound, prove_unavoidable
from .verify import DEFAULT_PREFIX_LEN, DEFAULT_SEARCH_DEPTH, run_verify_lemmas
from .words import from_text, parse_kind, to_text


class UsageError(Exception):
    pass


def _emit(payload, out: str | None = None) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def cmd_generate(args) -> int:
    _emit(to_text(parse_kind(args.word).prefix(args.len)), args.out)
    return 0


def cmd_involutions(args) -> int:
    for inv in enumerate_involutions(args.k, args.kind):
        print(inv)
    return 0


def cmd_expand(args) -> int:
    p = parse_pattern(args.pattern)
    y = from_text(args.y)
    k = args.k or max(2, max(y, default=0) + 1)
    inv = parse_involution(args.inv, k, args.kind)
    _emit(to_text(expand(p, y, inv), k), args.out)
    return 0


def _read_word(args) -> bytes:
    sources = [s for s in (args.word, args.word_file, args.word_gen) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --word, --word-file, --word-gen")
    if args.word is not None:
        return from_text(args.word)
    if args.word_file is not None:
        return from_text(Path(args.word_file).read_text())
    if args.len is None:
        raise UsageError("--word-gen needs --len")
    return parse_kind(args.word_gen).prefix(args.len)


def cmd_scan(args) -> int:
    word = _read_word(args)
    p = parse_pattern(args.pattern)
    occ = find_instance(word, p, args.kind, args.k)
    if occ is None:
        _emit({"found": False}, args.out)
        return 0
    k = args.k or max(2, max(word) + 1)
    _emit({"found": True, "start": occ.start, "m": occ.m,
           "involution": str(occ.involution), "factor": to_text(occ.factor(word), k)},
          args.out)
    return 1 if args.expect_avoid else 0


def cmd_search(args) -> int:
    p = parse_pattern(args.pattern)
    verdict = prove_unavoidable(p, args.k, args.kind, args.max_len)
    if isinstance(verdict, AvoiderFound):
        payload = {"outcome": "avoider", "longest": f">= {args.max_len}",
                   "nodes": verdict.nodes_explored,
                   "witness": to_text(verdict.witness, args.k)}
    else:
        payload = {"outcome": "unavoidable", "longest": verdict.longest_avoider_len,
                   "leaves": verdict.leaf_count, "nodes": verdict.nodes_explored,
                   "witness": to_text(verdict.longest_avoider, args.k)}
    _emit(payload, args.out)
    return 0


def cmd_classify(args) -> int:
    p = parse_pattern(args.pattern)
    _emit({"pattern": str(p), "kind": args.kind.value,
           "index": format_index(classify_index(p, args.kind))}, args.out)
    return 0


def cmd_verify(args) -> int:
    report = run_verify_lemmas(args.prefix_len, args.search_depth, args.threads)
    _emit(report.to_text() if args.format == "text" else report.to_json(), args.out)
    return 0 if report.status == "pass" else 1


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _kind(text: str) -> Kind:
    try:
        return Kind.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value file supplying flag defaults")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="invavoid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    subs = {}

    def add(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        subs[name] = sp
        return sp

    sp = add("generate", cmd_generate, "print a prefix of tm, w, v, u or periodic:<base>")
    sp.add_argument("word")
    sp.add_argument("--len", type=_nonnegative, required=True)

    sp = add("involutions", cmd_involutions, "list involutions of a k-letter alphabet")
    sp.add_argument("--k", type=_positive, default=2)
    sp.add_argument("--kind", type=_kind, default=Kind.MORPHIC)

    sp = add("expand", cmd_expand, "substitute y for x in a pattern")
    sp.add_argument("pattern")
    sp.add_argument("y")
    sp.add_argument("--inv", default="id", help="cycle notation, e.g. id, (01), (01)/a")
    sp.add_argument("--kind", type=_kind, default=None)
    sp.add_argument("--k", type=_positive, default=None)

    sp = add("scan", cmd_scan, "find the first instance of a pattern in a word")
    sp.add_argument("--word")
    sp.add_argument("--word-file")
    sp.add_argument("--word-gen")
    sp.add_argument("--len", type=_nonnegative)
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--kind", type=_kind, default=Kind.MORPHIC)
    sp.add_argument("--k", type=_positive, default=None, help="alphabet size (default 2)")
    sp.add_argument("--expect-avoid", action="store_true",
                    help="exit 1 if an instance is found")

    sp = add("search", cmd_search, "exhaustive search for long avoiders")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--kind", type=_kind, default=Kind.MORPHIC)
    sp.add_argument("--k", type=_positive, default=2)
    sp.add_argument("--max-len", type=_positive, default=200)

    sp = add("classify", cmd_classify, "avoidance index of a pattern")
    sp.add_argument("pattern")
    sp.add_argument("--kind", type=_kind, default=Kind.MORPHIC)

    sp = add("verify-lemmas", cmd_verify, "run the whole verification suite")
    sp.add_argument("--prefix-len", type=_positive, default=DEFAULT_PREFIX_LEN)
    sp.add_argument("--search-depth", type=_positive, default=DEFAULT_SEARCH_DEPTH)
    sp.add_argument("--threads", type=_positive, default=None,
                    help="worker threads (default: $INVAVOID_THREADS or CPU count)")
    sp.add_argument("--format", choices=("json", "text"), default="json")
    return parser, subs


def read_config(path: str) -> dict[str, str]:
    values = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        values[key.strip().replace("-", "_")] = value.strip()
    return values


def _apply_config(parser, subs, argv) -> argparse.Namespace:
    argv = list(sys.argv[1:] if argv is None else argv)
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    pre_args, _ = pre.parse_known_args(argv)
    command = next((a for a in argv if a in subs), None)
    if not pre_args.config or command is None:
        return parser.parse_args(argv)
    sp = subs[command]
    actions = {a.dest: a for a in sp._actions}
    defaults = {}
    for key, value in read_config(pre_args.config).items():
        if key not in actions or key in ("help", "config"):
            raise UsageError(f"unknown config key {key!r} for {command}")
        action = actions[key]
        if isinstance(action, argparse._StoreTrueAction):
            defaults[key] = value.lower() in ("1", "true", "yes", "on")
        else:
            defaults[key] = value
            # a config value satisfies a required flag
            action.required = False
    sp.set_defaults(**defaults)
    # string defaults go through each action's type= on reparse
    return parser.parse_args(argv)


def main(argv: list[str] | None = None) -> int:
    parser, subs = build_parser()
    try:
        args = _apply_config(parser, subs, argv)
        return args.func(args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    except (UsageError, ValueError) as e:
        print(f"invavoid: error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"invavoid: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
