"""Command-line interface.

Subcommands:
  check      classify one word with the selected checkers
  batch      classify every word in a file (or stdin), one per line
  enumerate  run all checkers against each other over every diagram of size n
  trace      show the reduction steps and the boundary circles of a word
  bench      time the linear reducer on random words

Exit codes: 0 embeddable, 1 not embeddable, 2 input error, 3 checker
disagreement (3 wins over 1, 2 wins over 1 in batch mode).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable

from .genus import boundary_components
from .reduction import fully_reduce_linear, classify_residual
from .reports import (
    bench_json,
    bench_text,
    classify_word,
    enumeration_json,
    enumeration_text,
    report_json,
    report_text,
    run_bench,
    run_enumeration,
)
from .words import (
    BoundExceededError,
    DEFAULT_ENUMERATION_BOUND,
    Word,
    WordError,
    format_word,
    letter_name,
    parse_word,
)

EXIT_EMBEDDABLE = 0
EXIT_NOT_EMBEDDABLE = 1
EXIT_INPUT_ERROR = 2
EXIT_DISAGREEMENT = 3


def _parse_or_complain(text: str, where: str = "") -> Word | None:
    try:
        return parse_word(text)
    except WordError as exc:
        prefix = f"{where}: " if where else ""
        print(f"error: {prefix}{exc}", file=sys.stderr)
        return None


def _cmd_check(args: argparse.Namespace) -> int:
    w = _parse_or_complain(args.word)
    if w is None:
        return EXIT_INPUT_ERROR
    r = classify_word(w, given=args.word,
                      include_reflection=not args.no_reflection, fast=args.fast)
    if args.json:
        print(json.dumps(report_json(r)))
    else:
        print(report_text(r))
    if not r.agreement:
        return EXIT_DISAGREEMENT
    return EXIT_EMBEDDABLE if r.torus_embeddable else EXIT_NOT_EMBEDDABLE


def _batch_lines(path: str) -> Iterable[tuple[int, str]]:
    if path == "-":
        for i, line in enumerate(sys.stdin, start=1):
            yield i, line.rstrip("\n")
    else:
        with open(path, encoding="utf-8") as fh:
            for i, line in enumerate(fh, start=1):
                yield i, line.rstrip("\n")


def _cmd_batch(args: argparse.Namespace) -> int:
    total = embeddable = errors = disagreements = 0
    for lineno, line in _batch_lines(args.path):
        if line.lstrip().startswith("#"):
            continue
        w = _parse_or_complain(line, where=f"line {lineno}")
        if w is None:
            errors += 1
            continue
        r = classify_word(w, given=line.strip(),
                          include_reflection=not args.no_reflection, fast=args.fast)
        total += 1
        embeddable += r.torus_embeddable
        disagreements += not r.agreement
        if args.json:
            out = report_json(r)
            out["line"] = lineno
            print(json.dumps(out))
        else:
            verdict = "embeddable" if r.torus_embeddable else "not-embeddable"
            extra = "" if r.agreement else "  DISAGREEMENT"
            print(f"line {lineno}: {format_word(r.word) or '()'}"
                  f"  genus={r.genus}  {verdict}{extra}")
    summary = {
        "schema": 1,
        "summary": True,
        "words": total,
        "embeddable": embeddable,
        "errors": errors,
        "disagreements": disagreements,
    }
    if args.json:
        print(json.dumps(summary))
    else:
        print(f"total {total} word(s): {embeddable} embeddable, "
              f"{errors} input error(s), {disagreements} disagreement(s)")
    if disagreements:
        return EXIT_DISAGREEMENT
    if errors:
        return EXIT_INPUT_ERROR
    return EXIT_NOT_EMBEDDABLE if embeddable < total else EXIT_EMBEDDABLE


def _cmd_enumerate(args: argparse.Namespace) -> int:
    try:
        summary = run_enumeration(args.n, dedupe=args.dedupe, max_n=args.max_n,
                                  include_reflection=not args.no_reflection)
    except (BoundExceededError, WordError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if args.json:
        print(json.dumps(enumeration_json(summary)))
    else:
        print(enumeration_text(summary))
    return EXIT_DISAGREEMENT if summary.disagreements else EXIT_EMBEDDABLE


def _cmd_trace(args: argparse.Namespace) -> int:
    w = _parse_or_complain(args.word)
    if w is None:
        return EXIT_INPUT_ERROR
    trace = fully_reduce_linear(w)
    residual_class = classify_residual(trace.residual)
    bt = boundary_components(w)
    if args.json:
        print(json.dumps({
            "schema": 1,
            "word": format_word(w),
            "steps": [
                {
                    "kind": s.kind,
                    "letters": [letter_name(x) for x in s.letters],
                    "positions": list(s.positions),
                }
                for s in trace.steps
            ],
            "residual": format_word(trace.residual),
            "residual_class": residual_class.value,
            "work": trace.work,
            "boundary_orbits": [list(o) for o in bt.orbits],
            "boundary_circles": bt.count,
        }))
    else:
        print(f"word      {format_word(w) or '()'}")
        for i, s in enumerate(trace.steps, start=1):
            letters = ",".join(letter_name(x) for x in s.letters)
            print(f"  step {i}: {s.kind} removes {letters} at positions {s.positions}")
        if not trace.steps:
            print("  no reduction applies")
        print(f"residual  {format_word(trace.residual) or '()'} [{residual_class.value}]")
        for o in bt.orbits:
            print(f"  boundary orbit: {' -> '.join(str(p) for p in o)}")
        print(f"boundary  {bt.count} circle(s)")
    return EXIT_EMBEDDABLE


def _cmd_bench(args: argparse.Namespace) -> int:
    report = run_bench(args.sizes, trials=args.trials, seed=args.seed)
    if args.json:
        print(json.dumps(bench_json(report)))
    else:
        print(bench_text(report))
    return EXIT_EMBEDDABLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordtorus",
        description="Decide whether a one-vertex rotation system embeds in the torus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--no-reflection", action="store_true",
                       help="treat mirror-image words as distinct")

    p_check = sub.add_parser("check", help="classify one word")
    p_check.add_argument("word", help="word text, e.g. 'abab' or '0,1,0,1'")
    p_check.add_argument("--fast", action="store_true",
                         help="run only the linear reduction checker")
    add_common(p_check)
    p_check.set_defaults(func=_cmd_check)

    p_batch = sub.add_parser("batch", help="classify words from a file or stdin")
    p_batch.add_argument("path", help="input file, or - for stdin")
    p_batch.add_argument("--fast", action="store_true",
                         help="run only the linear reduction checker")
    add_common(p_batch)
    p_batch.set_defaults(func=_cmd_batch)

    p_enum = sub.add_parser("enumerate", help="cross-validate all checkers at size n")
    p_enum.add_argument("n", type=int)
    p_enum.add_argument("--dedupe", action="store_true",
                        help="one representative per symmetry class")
    p_enum.add_argument("--max-n", type=int, default=DEFAULT_ENUMERATION_BOUND,
                        help="enumeration size bound (default %(default)s)")
    add_common(p_enum)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_trace = sub.add_parser("trace", help="show reduction steps and boundary orbits")
    p_trace.add_argument("word")
    add_common(p_trace)
    p_trace.set_defaults(func=_cmd_trace)

    p_bench = sub.add_parser("bench", help="time the linear reducer on random words")
    p_bench.add_argument("sizes", type=int, nargs="+", help="loop counts to test")
    p_bench.add_argument("--trials", type=int, default=3)
    p_bench.add_argument("--seed", type=int, default=0)
    add_common(p_bench)
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
