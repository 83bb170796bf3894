"""Non-standard word expansion: numbers (with a year reading), dotted
abbreviations, and pronounceable symbols become plain Devanagari words."""

from __future__ import annotations

import io
import unicodedata
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import BinaryIO

from .errors import MalformedLine, OutOfRange
from .tokens import Token, TokenKind

MAX_NUMBER = 999_999_999  # crore-scale grouping; no names beyond this

DEFAULT_YEAR_TRIGGERS = ("सन", "सन्", "वर्ष", "ईस्वी")

DECIMAL_POINT_WORD = "दशमलव"


class NswClass(Enum):
    YEAR = "year"
    CARDINAL = "cardinal"
    ABBREVIATION = "abbreviation"
    SYMBOL = "symbol"


@dataclass(frozen=True)
class NumberNameTable:
    units: tuple[str, ...]  # names for 0..99, all distinct
    hundred: str
    thousand: str
    lakh: str
    crore: str

    def __post_init__(self):
        if len(self.units) != 100:
            raise ValueError(f"need 100 unit names, got {len(self.units)}")
        if len(set(self.units)) != 100:
            raise ValueError("unit names must be distinct")


@dataclass(frozen=True)
class NormalizeTables:
    numbers: NumberNameTable
    abbreviations: dict[str, tuple[str, ...]]
    symbols: dict[str, tuple[str, ...]]


def _read_lines(source: str | Path | bytes | BinaryIO):
    if isinstance(source, (str, Path)):
        raw = Path(source).read_bytes()
    elif isinstance(source, bytes):
        raw = source
    else:
        raw = source.read()
    for line_no, line_bytes in enumerate(raw.split(b"\n"), start=1):
        try:
            line = line_bytes.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedLine(line_no, f"not valid UTF-8: {exc}") from None
        if line_no == 1:
            line = line.lstrip("﻿")
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        yield line_no, line


def load_number_names(source) -> NumberNameTable:
    """Lines ``value<TAB>name`` for 0-99 plus 100, 1000, 100000, 10000000."""
    names: dict[int, str] = {}
    for line_no, line in _read_lines(source):
        parts = line.split("\t")
        if len(parts) != 2:
            raise MalformedLine(line_no, "expected value<TAB>name")
        try:
            value = int(parts[0])
        except ValueError:
            raise MalformedLine(line_no, f"bad value {parts[0]!r}") from None
        names[value] = unicodedata.normalize("NFC", parts[1].strip())
    missing = [v for v in (*range(100), 100, 1000, 100_000, 10_000_000) if v not in names]
    if missing:
        raise MalformedLine(0, f"missing number names for {missing[:5]}...")
    return NumberNameTable(
        units=tuple(names[v] for v in range(100)),
        hundred=names[100],
        thousand=names[1000],
        lakh=names[100_000],
        crore=names[10_000_000],
    )


def _load_expansions(source) -> dict[str, tuple[str, ...]]:
    table: dict[str, tuple[str, ...]] = {}
    for line_no, line in _read_lines(source):
        parts = line.split("\t")
        if len(parts) != 2 or not parts[1].strip():
            raise MalformedLine(line_no, "expected key<TAB>expansion")
        key = unicodedata.normalize("NFC", parts[0].strip())
        words = tuple(unicodedata.normalize("NFC", w) for w in parts[1].split())
        table[key] = words
    return table


load_abbreviations = _load_expansions
load_symbols = _load_expansions


def loads_number_names(text: str) -> NumberNameTable:
    return load_number_names(io.BytesIO(text.encode("utf-8")))


def classify_nsw(
    token: Token,
    left_context: Token | None = None,
    right_context: Token | None = None,
    year_triggers: tuple[str, ...] = DEFAULT_YEAR_TRIGGERS,
) -> NswClass:
    """Classify a non-standard-word token.

    A Number reads as a year only when the previous word is a year trigger
    (e.g. सन) and its value is plausible as one; cardinal is the default,
    so a following unit word (किलो etc.) needs no special handling.
    """
    if token.kind is TokenKind.ABBREVIATION:
        return NswClass.ABBREVIATION
    if token.kind is TokenKind.SYMBOL:
        return NswClass.SYMBOL
    if token.kind is not TokenKind.NUMBER:
        raise ValueError(f"not a non-standard-word token: {token.kind}")
    value = int(token.text)
    if (
        left_context is not None
        and left_context.kind is TokenKind.WORD
        and unicodedata.normalize("NFC", left_context.text) in year_triggers
        and 1000 <= value <= 2999
    ):
        return NswClass.YEAR
    return NswClass.CARDINAL


def expand_number(value: int, cls: NswClass, table: NumberNameTable) -> list[str]:
    """Spell out a number using Indian grouping (crore/lakh/thousand/hundred).

    Years 1000-1999 read as two 2-digit groups joined by the hundred word
    (1990 -> उन्नीस सौ नब्बे); years from 2000 on read as cardinals.
    """
    if value < 0 or value > MAX_NUMBER:
        raise OutOfRange(f"{value} outside [0, {MAX_NUMBER}]")
    if cls is NswClass.YEAR:
        if not 1000 <= value <= 2999:
            raise OutOfRange(f"{value} not plausible as a year")
        if value < 2000:
            high, low = divmod(value, 100)
            words = [table.units[high], table.hundred]
            if low:
                words.append(table.units[low])
            return words
        return expand_number(value, NswClass.CARDINAL, table)
    if cls is not NswClass.CARDINAL:
        raise ValueError(f"not a number class: {cls}")

    if value == 0:
        return [table.units[0]]
    crore, rem = divmod(value, 10_000_000)
    lakh, rem = divmod(rem, 100_000)
    thousand, rem = divmod(rem, 1000)
    hundred, units = divmod(rem, 100)
    words: list[str] = []
    if crore:
        words += [table.units[crore], table.crore]
    if lakh:
        words += [table.units[lakh], table.lakh]
    if thousand:
        words += [table.units[thousand], table.thousand]
    if hundred:
        words += [table.units[hundred], table.hundred]
    if units:
        words.append(table.units[units])
    return words


def expand_abbreviation(
    token: Token, table: dict[str, tuple[str, ...]]
) -> tuple[list[str], bool]:
    """Exact-match expansion after NFC. Returns (words, known); unknown
    abbreviations come back as themselves so the caller can flag them."""
    if token.kind is not TokenKind.ABBREVIATION:
        raise ValueError(f"not an abbreviation token: {token.kind}")
    key = unicodedata.normalize("NFC", token.text)
    words = table.get(key)
    if words is None:
        return [token.text], False
    return list(words), True


@dataclass(frozen=True)
class NormalizedText:
    tokens: tuple[Token, ...]
    flagged: tuple[tuple[Token, str], ...]  # (token, reason)


def _word_tokens(words: list[str], src: Token) -> list[Token]:
    return [Token(w, TokenKind.WORD, src.start, src.end) for w in words]


def normalize_text(
    tokens: list[Token],
    tables: NormalizeTables,
    year_triggers: tuple[str, ...] = DEFAULT_YEAR_TRIGGERS,
) -> NormalizedText:
    """Replace NSW tokens with Word tokens of their expansion.

    Word, punctuation, and whitespace tokens pass through unchanged.
    Expansion tokens reuse the source token's span as provenance. Unknown
    abbreviations and out-of-range numbers stay as-is and are flagged.
    Applying the function to its own output changes nothing.
    """
    out: list[Token] = []
    flagged: list[tuple[Token, str]] = []
    prev_word: Token | None = None
    i = 0
    n = len(tokens)
    while i < n:
        tok = tokens[i]

        if tok.kind is TokenKind.WORD:
            prev_word = tok
            out.append(tok)
            i += 1
            continue

        if tok.kind is TokenKind.NUMBER:
            # Decimal pattern: NUMBER '.' NUMBER with no gaps.
            frac: Token | None = None
            if (
                i + 2 < n
                and tokens[i + 1].kind is TokenKind.PUNCTUATION
                and tokens[i + 1].text == "."
                and tokens[i + 1].start == tok.end
                and tokens[i + 2].kind is TokenKind.NUMBER
                and tokens[i + 2].start == tokens[i + 1].end
            ):
                frac = tokens[i + 2]
            next_word = _next_word(tokens, i + (3 if frac else 1))
            cls = classify_nsw(tok, prev_word, next_word, year_triggers)
            try:
                words = expand_number(int(tok.text), cls, tables.numbers)
                if frac is not None:
                    words = words + [DECIMAL_POINT_WORD] + [
                        tables.numbers.units[int(d)] for d in frac.text
                    ]
            except OutOfRange:
                out.append(tok)
                flagged.append((tok, "number_out_of_range"))
                prev_word = None
                i += 1
                continue
            span_end = frac.end if frac is not None else tok.end
            src = Token(tok.text, tok.kind, tok.start, span_end)
            out.extend(_word_tokens(words, src))
            prev_word = None  # a year trigger must immediately precede its number
            i += 3 if frac is not None else 1
            continue

        if tok.kind is TokenKind.ABBREVIATION:
            words, known = expand_abbreviation(tok, tables.abbreviations)
            if known:
                out.extend(_word_tokens(words, tok))
            else:
                out.append(tok)
                flagged.append((tok, "unknown_abbreviation"))
            prev_word = None
            i += 1
            continue

        if tok.kind is TokenKind.SYMBOL:
            words = tables.symbols.get(unicodedata.normalize("NFC", tok.text))
            if words is not None:
                out.extend(_word_tokens(list(words), tok))
            else:
                out.append(tok)
            prev_word = None
            i += 1
            continue

        if tok.kind is not TokenKind.WHITESPACE:
            prev_word = None  # only a directly preceding word can trigger a year
        out.append(tok)
        i += 1

    return NormalizedText(tuple(out), tuple(flagged))


def _next_word(tokens: list[Token], i: int) -> Token | None:
    for tok in tokens[i:]:
        if tok.kind is TokenKind.WORD:
            return tok
        if tok.kind is not TokenKind.WHITESPACE:
            return None
    return None
