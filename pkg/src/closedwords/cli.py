"""Command-line interface.

Exit codes: 0 success, 2 usage or input error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Iterable, Sequence

from closedwords.classify import analyze
from closedwords.factors import closed_factors, count_closed_factors, palindromic_factors
from closedwords.search import (
    cr_poor_count_formula,
    enumerate_cr_poor,
    format_table_tsv,
    max_closed_table,
    quadratic_witness,
)
from closedwords.suites import SUITES, run_suite
from closedwords.words import WordError, validate_word

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3

REPORT_KEYS = (
    "word", "length", "closed_count", "palindromic_count",
    "closed", "cr_poor", "rich", "bitonic", "violation",
)


class VerificationFailure(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _input_words(args_words: Sequence[str]) -> Iterable[str]:
    if args_words:
        yield from args_words
        return
    for line in sys.stdin:
        yield line.rstrip("\n").rstrip("\r")


def _tsv_value(key: str, value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if key == "violation":
        return ",".join(f"{s}-{e}" for s, e in value)
    return str(value)


def cmd_analyze(args: argparse.Namespace) -> int:
    if args.format == "tsv":
        _emit("\t".join(REPORT_KEYS))
    for w in _input_words(args.words):
        report = analyze(validate_word(w)).to_dict()
        if args.format == "json":
            _emit(json.dumps(report))
        elif args.format == "tsv":
            _emit("\t".join(_tsv_value(k, report.get(k)) for k in REPORT_KEYS))
        else:
            _emit(" ".join(f"{k}={_tsv_value(k, v)}" for k, v in report.items()))
    return EXIT_OK


def cmd_factors(args: argparse.Namespace) -> int:
    w = validate_word(args.word)
    fs = closed_factors(w) if args.kind == "closed" else palindromic_factors(w)
    members = fs.sorted()
    if args.format == "json":
        _emit(json.dumps({"word": w, "kind": args.kind, "count": len(members), "factors": members}))
    else:
        if args.format == "tsv":
            _emit("factor")
        sys.stdout.write("".join(u + "\n" for u in members))
    return EXIT_OK


def cmd_enum_crpoor(args: argparse.Namespace) -> int:
    alphabet = validate_word(args.alphabet)
    if not alphabet:
        raise WordError("alphabet must be non-empty")
    if args.n < 0:
        raise WordError("n must be non-negative")
    words = enumerate_cr_poor(args.n, alphabet)
    if args.format == "json":
        _emit(json.dumps({"n": args.n, "alphabet": "".join(sorted(set(alphabet))),
                          "count": len(words), "words": words}))
    else:
        if args.format == "tsv":
            _emit("word")
        sys.stdout.write("".join(u + "\n" for u in words))
        _emit(str(len(words)))
    if len(set(alphabet)) == 2 and args.n > 0 and len(words) != cr_poor_count_formula(args.n):
        raise VerificationFailure(
            f"found {len(words)} binary CR-poor words, expected {cr_poor_count_formula(args.n)}"
        )
    return EXIT_OK


def cmd_max_table(args: argparse.Namespace) -> int:
    rows = max_closed_table(args.to, use_symmetry=not args.no_symmetry, jobs=args.jobs)
    if args.format == "json":
        _emit(json.dumps([{"n": r.n, "max": r.max_count, "witness": r.witness} for r in rows]))
    else:
        sys.stdout.write(format_table_tsv(rows))
    return EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    qw = quadratic_witness(args.n)
    count = count_closed_factors(qw.word) if args.count else None
    if args.format == "json":
        doc = {"n": qw.n, "k": qw.k, "word": qw.word}
        if count is not None:
            doc.update(count=count, bound=qw.guaranteed_lower_bound)
        _emit(json.dumps(doc))
    elif args.format == "tsv":
        header, row = ["n", "k", "word"], [str(qw.n), str(qw.k), qw.word]
        if count is not None:
            header += ["count", "bound"]
            row += [str(count), str(qw.guaranteed_lower_bound)]
        _emit("\t".join(header))
        _emit("\t".join(row))
    else:
        _emit(qw.word)
        if count is not None:
            _emit(f"count {count}")
            _emit(f"bound {qw.guaranteed_lower_bound}")
    if count is not None and count < qw.guaranteed_lower_bound:
        raise VerificationFailure(f"count {count} below bound {qw.guaranteed_lower_bound}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_suite(args.suite, args.max_len, args.jobs)
    if args.format == "json":
        _emit(json.dumps([r.__dict__ for r in results]))
    else:
        for r in results:
            _emit(r.line())
    if not all(r.passed for r in results):
        raise VerificationFailure(f"{sum(not r.passed for r in results)} properties failed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv", "plain"), default="plain")

    parser = argparse.ArgumentParser(prog="closedwords", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="classify words (arguments or stdin lines)")
    p.add_argument("words", nargs="*")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("factors", parents=[common], help="list distinct closed or palindromic factors")
    p.add_argument("word")
    p.add_argument("--kind", choices=("closed", "pal"), default="closed")
    p.set_defaults(func=cmd_factors)

    p = sub.add_parser("enum-crpoor", parents=[common], help="list CR-poor words of a given length")
    p.add_argument("-n", "--n", dest="n", type=int, required=True)
    p.add_argument("-s", "--alphabet", default="ab")
    p.set_defaults(func=cmd_enum_crpoor)

    p = sub.add_parser("max-table", parents=[common], help="maximum closed-factor counts of binary words")
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-symmetry", action="store_true", help="search all 2^n words")
    p.set_defaults(func=cmd_max_table)

    p = sub.add_parser("witness", parents=[common], help="a^k b^k a^k b^k a^(n-4k) construction")
    p.add_argument("-n", "--n", dest="n", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", parents=[common], help="run property suites")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except WordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
