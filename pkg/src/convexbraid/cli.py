"""Command line entry point: ``convexbraid <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path
from typing import Sequence

from . import derivations, presentations
from .diagram import emit_diagram
from .expand import expand_full
from .oracle import equal
from .words import ParseError, format_word, parse

USAGE_ERROR = 2
FAILURE = 1


class UsageError(Exception):
    pass


def _parse_word(text: str, n: int):
    try:
        return parse(text, n)
    except (ParseError, ValueError) as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}") from None


def _build(kind: str, n: int):
    try:
        return presentations.build(kind, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_present(args) -> int:
    p = _build(args.kind, args.n)
    text = presentations.to_json(p) + "\n" if args.format == "structured" else presentations.to_text(p)
    _write(text, args.out)
    return 0


def cmd_verify(args) -> int:
    p = _build(args.kind, args.n)
    report = presentations.verify_presentation(p, jobs=args.jobs)
    for r in report.failed:
        print(f"FAIL {r.index} [{r.tag}] {r.relator}")
    print(report.summary())
    return 0 if report.passed else FAILURE


def cmd_equal(args) -> int:
    a, b = _parse_word(args.word1, args.n), _parse_word(args.word2, args.n)
    same = equal(a, b, args.n)
    print("equal" if same else "not equal")
    return 0 if same else FAILURE


def cmd_expand(args) -> int:
    print(format_word(expand_full(_parse_word(args.word, args.n))))
    return 0


def cmd_abelianize(args) -> int:
    print(presentations.abelianize(_build(args.kind, args.n)))
    return 0


def cmd_witness(args) -> int:
    try:
        u = derivations.central_witness(args.i, args.j, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(format_word(u))
    ok = derivations.verify_central_witness(args.i, args.j, args.n)
    if not ok:
        print(f"witness for ({args.i}, {args.j}) fails the oracle", file=sys.stderr)
    return 0 if ok else FAILURE


def _scripts(args):
    name = args.script
    if name == "all" or name in derivations.SCRIPTS:
        names = list(derivations.SCRIPTS) if name == "all" else [name]
        for n in args.n:
            for nm in names:
                yield from derivations.bundled(nm, n)
        return
    path = Path(name)
    if not path.exists():
        raise UsageError(f"{name!r} is neither a bundled script nor a file")
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
        docs = doc if isinstance(doc, list) else [doc]
        for d in docs:
            yield derivations.script_from_document(d)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad script file {name}: {exc}") from None


def cmd_derive(args) -> int:
    total = failed = 0
    for s in _scripts(args):
        report = derivations.check_script(s, debug=not args.release)
        total += 1
        if not report.passed:
            failed += 1
        if args.verbose or not report.passed:
            print(report.line())
    print(f"scripts: {total}, failed: {failed}")
    return 0 if failed == 0 else FAILURE


def _set_list(items: Sequence[str]) -> list[list[int]]:
    sets = []
    for item in items:
        for chunk in re.findall(r"\{([^}]*)\}", item) or item.split(";"):
            try:
                sets.append([int(x) for x in re.split(r"[,\s]+", chunk.strip()) if x])
            except ValueError:
                raise UsageError(f"bad set {chunk!r}") from None
    return sets


def cmd_diagram(args) -> int:
    try:
        svg = emit_diagram(args.n, _set_list(args.sets))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write(svg, args.out)
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="convexbraid",
        description="Presentations of the pure braid group on a convexly punctured disc.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    kinds = list(presentations.KINDS)

    p = sub.add_parser("present", help="write a presentation")
    p.add_argument("--kind", required=True, choices=kinds)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("verify", help="check every relator with the oracle")
    p.add_argument("--kind", required=True, choices=kinds)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("equal", help="exit 0 iff two words are the same braid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("expand", help="rewrite a word in Artin generators")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("abelianize", help="abelian invariants of a presentation")
    p.add_argument("--kind", required=True, choices=kinds)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_abelianize)

    p = sub.add_parser("witness", help="U with S_ij U = U S_ij = S_A")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("derive", help="replay a rewrite script")
    p.add_argument("--script", required=True,
                   help="bundled script name, 'all', or a JSON script file")
    p.add_argument("--n", type=int, nargs="+", default=[4, 5],
                   help="puncture counts for bundled scripts (default: 4 5)")
    p.add_argument("--release", action="store_true", help="check endpoints only")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("diagram", help="SVG of the disc with set hulls")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sets", nargs="*", default=[], help='e.g. "{1,2,3,5}" "{4,7,8}"')
    p.add_argument("--out")
    p.set_defaults(func=cmd_diagram)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"convexbraid {args.command}: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
