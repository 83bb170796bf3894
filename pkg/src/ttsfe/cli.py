"""Batch command-line interface.

    ttsfe check [--json] [FILE]       list misspellings + suggestions
    ttsfe correct [FILE]              auto-corrected text to stdout
    ttsfe normalize [FILE]            NSW-expanded word sequence
    ttsfe wx [FILE]                   orthographic WX per word
    ttsfe g2p [FILE]                  phonemes per word
    ttsfe analyze [--json] [FILE]     full analysis report
    ttsfe golden regen [--file PATH]  regenerate the G2P golden corpus

Input comes from FILE or stdin (UTF-8, BOM tolerated). Exit codes: 0 ok,
1 unresolved items under --strict, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import ConfigError, FrontendError
from .g2p import g2p
from .pipeline import SCHEMA_VERSION, PipelineConfig, analyze, data_dir, load_data
from .tokens import TokenKind, tokenize
from .wx import to_wx


def _add_data_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lexicon", metavar="PATH", help="lexicon file")
    parser.add_argument("--abbrev", metavar="PATH", help="abbreviation table")
    parser.add_argument("--numbers", metavar="PATH", help="number-name table")
    parser.add_argument("--symbols", metavar="PATH", help="symbol table")


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    _add_data_flags(parser)
    parser.add_argument("--topk", type=int, default=5, metavar="N")
    parser.add_argument("--max-distance", type=int, default=2, metavar="N")
    parser.add_argument("--strict", action="store_true", help="exit 1 on unresolved items")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("file", nargs="?", help="input file (default: stdin)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ttsfe", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("check", "correct", "normalize", "wx", "g2p", "analyze"):
        cmd = sub.add_parser(name)
        _add_common_flags(cmd)
    golden = sub.add_parser("golden")
    golden_sub = golden.add_subparsers(dest="action", required=True)
    regen = golden_sub.add_parser("regen")
    regen.add_argument("--file", metavar="PATH", help="golden corpus to rewrite")
    return parser


def _read_input(args) -> str:
    if args.file:
        raw = Path(args.file).read_bytes()
    else:
        raw = sys.stdin.buffer.read()
    return raw.decode("utf-8").lstrip("﻿")


def _load(args):
    return load_data(
        lexicon_path=args.lexicon,
        abbrev_path=args.abbrev,
        numbers_path=args.numbers,
        symbols_path=args.symbols,
    )


def _config(args, auto_correct: bool) -> PipelineConfig:
    return PipelineConfig(
        top_k=args.topk, max_distance=args.max_distance, auto_correct=auto_correct
    )


def _emit(doc: dict) -> None:
    print(json.dumps(doc, ensure_ascii=False))


def _word_command(args, convert) -> int:
    """Shared driver for ``wx`` and ``g2p``: convert every word token per
    input line, keeping line structure."""
    lines_out = []
    errors = []
    for line in _read_input(args).splitlines():
        values = []
        for tok in tokenize(line):
            if tok.kind is not TokenKind.WORD:
                continue
            try:
                values.append(convert(tok.text))
            except FrontendError as exc:
                values.append(None)
                errors.append({"word": tok.text, "error": str(exc)})
        lines_out.append(values)
    if args.json:
        _emit(
            {
                "schema_version": SCHEMA_VERSION,
                "lines": lines_out,
                "errors": errors,
            }
        )
    else:
        for values in lines_out:
            print(" ".join(v if v is not None else "?" for v in values))
        for err in errors:
            print(f"{err['word']}: {err['error']}", file=sys.stderr)
    return 1 if (args.strict and errors) else 0


def run_cli(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "golden":
        return _golden_regen(args)

    try:
        if args.command in ("wx", "g2p"):
            convert = to_wx if args.command == "wx" else (lambda w: g2p(w).value)
            return _word_command(args, convert)

        data = _load(args)
        if args.command == "check":
            report = analyze(_read_input(args), _config(args, False), data)
            if args.json:
                _emit(
                    {
                        "schema_version": SCHEMA_VERSION,
                        "misspellings": report.to_dict()["misspellings"],
                    }
                )
            else:
                for m in report.misspellings:
                    options = ", ".join(
                        f"{s.candidate} ({s.distance})" for s in m.suggestions
                    )
                    print(f"{m.text}\t{options if options else '-'}")
            return 1 if (args.strict and report.misspellings) else 0

        if args.command == "correct":
            report = analyze(_read_input(args), _config(args, True), data)
            if args.json:
                doc = report.to_dict()
                _emit(
                    {
                        "schema_version": SCHEMA_VERSION,
                        "corrected": doc["corrected"],
                        "applied": doc["applied"],
                        "unresolved": doc["unresolved"],
                    }
                )
            else:
                sys.stdout.write(report.corrected)
                if report.corrected and not report.corrected.endswith("\n"):
                    sys.stdout.write("\n")
            return 1 if (args.strict and report.unresolved) else 0

        if args.command == "normalize":
            report = analyze(_read_input(args), _config(args, True), data)
            if args.json:
                _emit(
                    {
                        "schema_version": SCHEMA_VERSION,
                        "normalized": list(report.normalized),
                    }
                )
            else:
                print(" ".join(report.normalized))
            return 1 if (args.strict and report.unresolved) else 0

        # analyze
        report = analyze(_read_input(args), _config(args, True), data)
        if args.json:
            print(report.to_json())
        else:
            print(f"source:     {report.source}")
            print(f"corrected:  {report.corrected}")
            for m in report.misspellings:
                options = ", ".join(f"{s.candidate} ({s.distance})" for s in m.suggestions)
                print(f"misspelled: {m.text} -> {options if options else '-'}")
            print(f"normalized: {' '.join(report.normalized)}")
            print(f"phonemes:   {report.phonemes}")
            for u in report.unresolved:
                print(f"unresolved: {u.kind} {u.text}")
        return 1 if (args.strict and report.unresolved) else 0
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _golden_regen(args) -> int:
    path = Path(args.file) if args.file else data_dir() / "g2p_golden.tsv"
    if not path.is_file():
        print(f"error: golden corpus not found: {path}", file=sys.stderr)
        return 2
    words = []
    for line in path.read_text("utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        words.append(line.split("\t")[0])
    header = (
        "# devanagari\texpected-phonemes\n"
        "# Regenerated with `ttsfe golden regen`.\n"
    )
    body = "".join(f"{w}\t{g2p(w).value}\n" for w in words)
    path.write_text(header + body, encoding="utf-8")
    print(f"rewrote {len(words)} entries in {path}")
    return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
