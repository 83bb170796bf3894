"""Tokenizer: splits raw input into word / number / abbreviation / symbol /
punctuation / whitespace spans that tile the source string exactly."""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from enum import Enum

from .errors import MalformedCluster
from .script import ZWJ, ZWNJ, CharClass, LETTER_CLASSES, char_class, segment_aksharas


class TokenKind(Enum):
    WORD = "word"
    NUMBER = "number"
    ABBREVIATION = "abbreviation"
    SYMBOL = "symbol"
    PUNCTUATION = "punctuation"
    WHITESPACE = "whitespace"
    OTHER = "other"


@dataclass(frozen=True)
class Token:
    """A classified span. ``start``/``end`` index the string the token came
    from; tokens produced by normalization reuse the span of their source."""

    text: str
    kind: TokenKind
    start: int
    end: int

    @property
    def span(self) -> tuple[int, int]:
        return (self.start, self.end)


def _is_symbol_char(ch: str) -> bool:
    # '%' is Unicode punctuation but a pronounceable symbol for this pipeline.
    return ch == "%" or unicodedata.category(ch).startswith("S")


def _is_word_char(ch: str) -> bool:
    return char_class(ch) in LETTER_CLASSES


def _scan_word_run(text: str, i: int) -> int:
    """End of the Devanagari letter run starting at i. Joiners are kept only
    when they sit between letters, so a trailing joiner ends the run."""
    n = len(text)
    j = i
    while j < n:
        if _is_word_char(text[j]):
            j += 1
            continue
        if text[j] in (ZWJ, ZWNJ):
            k = j
            while k < n and text[k] in (ZWJ, ZWNJ):
                k += 1
            if k < n and _is_word_char(text[k]):
                j = k
                continue
        break
    return j


def _akshara_count(word: str) -> int:
    try:
        return len(segment_aksharas(word))
    except MalformedCluster:
        return 0


def _match_abbreviation(text: str, i: int) -> int | None:
    """Length of the dotted-abbreviation match starting at i, or None.

    Matches (letter-run '.')+ greedily. Two or more dotted groups always
    count (e.g. "यू.पी."); a lone group only when it is a single akshara
    (e.g. "डॉ."), so a sentence-final word followed by a full stop is not
    swallowed.
    """
    n = len(text)
    groups = 0
    first_run: str | None = None
    j = i
    while j < n:
        run_end = _scan_word_run(text, j)
        if run_end == j or run_end >= n or text[run_end] != ".":
            break
        if groups == 0:
            first_run = text[j:run_end]
        groups += 1
        j = run_end + 1
    if groups >= 2:
        return j - i
    if groups == 1 and first_run is not None and _akshara_count(first_run) == 1:
        return j - i
    return None


def tokenize(text: str) -> list[Token]:
    """Tokenize raw input. Token spans are disjoint, ordered, and cover every
    scalar value of ``text``; a letter/digit boundary always breaks a token,
    and ASCII and Devanagari digits never mix within one number."""
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        cls = char_class(ch)

        if cls is CharClass.WHITESPACE:
            j = i + 1
            while j < n and char_class(text[j]) is CharClass.WHITESPACE:
                j += 1
            tokens.append(Token(text[i:j], TokenKind.WHITESPACE, i, j))
            i = j
            continue

        if cls in (CharClass.ASCII_DIGIT, CharClass.DEV_DIGIT):
            j = i + 1
            while j < n and char_class(text[j]) is cls:
                j += 1
            tokens.append(Token(text[i:j], TokenKind.NUMBER, i, j))
            i = j
            continue

        if _is_word_char(ch):
            abbr_len = _match_abbreviation(text, i)
            if abbr_len is not None:
                tokens.append(
                    Token(text[i : i + abbr_len], TokenKind.ABBREVIATION, i, i + abbr_len)
                )
                i += abbr_len
                continue
            j = _scan_word_run(text, i)
            tokens.append(Token(text[i:j], TokenKind.WORD, i, j))
            i = j
            continue

        if _is_symbol_char(ch):
            tokens.append(Token(ch, TokenKind.SYMBOL, i, i + 1))
            i += 1
            continue

        if cls is CharClass.PUNCTUATION:
            tokens.append(Token(ch, TokenKind.PUNCTUATION, i, i + 1))
            i += 1
            continue

        # Latin letters, other scripts, stray joiners, controls.
        j = i + 1
        while j < n:
            c2 = text[j]
            if (
                char_class(c2) is CharClass.OTHER
                and not _is_symbol_char(c2)
                and not _is_word_char(c2)
            ):
                j += 1
            else:
                break
        tokens.append(Token(text[i:j], TokenKind.OTHER, i, j))
        i = j

    return tokens
