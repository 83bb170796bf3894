"""Devanagari character classification and akshara segmentation.

An akshara is the orthographic syllable: an independent vowel with optional
nasal/visarga marks, or a consonant cluster (virama-joined) with an optional
vowel sign and marks. Single non-letter characters count as degenerate
one-char aksharas so mixed strings can still be segmented.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from enum import Enum

from .errors import MalformedCluster

VIRAMA = "्"
ANUSVARA = "ं"
CANDRABINDU = "ँ"
VISARGA = "ः"
NUKTA = "़"
DANDA = "।"
DOUBLE_DANDA = "॥"
ZWNJ = "‌"
ZWJ = "‍"

# Codepoint ranges; start/end inclusive.
_INDEPENDENT_VOWEL_RANGES = ((0x0904, 0x0914), (0x0972, 0x0977))
_CONSONANT_RANGES = ((0x0915, 0x0939), (0x0958, 0x095F))
_DEPENDENT_SIGN_RANGES = ((0x093E, 0x094C), (0x0955, 0x0957), (0x0962, 0x0963))
_DEV_DIGIT_RANGE = (0x0966, 0x096F)


class CharClass(Enum):
    INDEPENDENT_VOWEL = "independent_vowel"
    CONSONANT = "consonant"
    DEPENDENT_VOWEL_SIGN = "dependent_vowel_sign"
    VIRAMA = "virama"
    ANUSVARA = "anusvara"
    CANDRABINDU = "candrabindu"
    VISARGA = "visarga"
    NUKTA = "nukta"
    DEV_DIGIT = "dev_digit"
    ASCII_DIGIT = "ascii_digit"
    WHITESPACE = "whitespace"
    PUNCTUATION = "punctuation"
    OTHER = "other"


_MODIFIERS = (CharClass.ANUSVARA, CharClass.CANDRABINDU, CharClass.VISARGA)

# Classes that may appear inside a Devanagari word run.
LETTER_CLASSES = frozenset(
    (
        CharClass.INDEPENDENT_VOWEL,
        CharClass.CONSONANT,
        CharClass.DEPENDENT_VOWEL_SIGN,
        CharClass.VIRAMA,
        CharClass.ANUSVARA,
        CharClass.CANDRABINDU,
        CharClass.VISARGA,
        CharClass.NUKTA,
    )
)


@dataclass(frozen=True)
class DevChar:
    char: str
    cls: CharClass

    @property
    def codepoint(self) -> int:
        return ord(self.char)


def _in_ranges(cp: int, ranges) -> bool:
    return any(lo <= cp <= hi for lo, hi in ranges)


def classify_char(char: str | int) -> DevChar:
    """Classify one Unicode scalar value. Unknown codepoints are OTHER."""
    ch = chr(char) if isinstance(char, int) else char
    if len(ch) != 1:
        raise ValueError(f"expected a single character, got {ch!r}")
    cp = ord(ch)
    if ch == VIRAMA:
        cls = CharClass.VIRAMA
    elif ch == ANUSVARA:
        cls = CharClass.ANUSVARA
    elif ch == CANDRABINDU:
        cls = CharClass.CANDRABINDU
    elif ch == VISARGA:
        cls = CharClass.VISARGA
    elif ch == NUKTA:
        cls = CharClass.NUKTA
    elif _in_ranges(cp, _INDEPENDENT_VOWEL_RANGES):
        cls = CharClass.INDEPENDENT_VOWEL
    elif _in_ranges(cp, _CONSONANT_RANGES):
        cls = CharClass.CONSONANT
    elif _in_ranges(cp, _DEPENDENT_SIGN_RANGES):
        cls = CharClass.DEPENDENT_VOWEL_SIGN
    elif _DEV_DIGIT_RANGE[0] <= cp <= _DEV_DIGIT_RANGE[1]:
        cls = CharClass.DEV_DIGIT
    elif "0" <= ch <= "9":
        cls = CharClass.ASCII_DIGIT
    elif ch.isspace():
        cls = CharClass.WHITESPACE
    elif unicodedata.category(ch).startswith("P"):
        cls = CharClass.PUNCTUATION
    else:
        cls = CharClass.OTHER
    return DevChar(ch, cls)


def char_class(ch: str) -> CharClass:
    return classify_char(ch).cls


@dataclass(frozen=True)
class Akshara:
    """One orthographic syllable; ``span`` indexes the source string."""

    text: str
    start: int
    end: int

    @property
    def chars(self) -> tuple[DevChar, ...]:
        return tuple(classify_char(c) for c in self.text)


def _cls_at(word: str, i: int) -> CharClass | None:
    if i >= len(word):
        return None
    return char_class(word[i])


def segment_aksharas(word: str, offset: int = 0) -> list[Akshara]:
    """Split ``word`` into aksharas; spans are offsets plus ``offset``.

    Raises MalformedCluster when the character sequence cannot be parsed:
    a virama or vowel sign with no consonant base, a nukta with no base,
    a dangling modifier, or a dead consonant glued to an independent vowel
    (which the transliterator could not represent unambiguously).
    """
    out: list[Akshara] = []
    i = 0
    n = len(word)

    def absorb_joiners(j: int) -> int:
        while j < n and word[j] in (ZWJ, ZWNJ):
            j += 1
        return j

    while i < n:
        start = i
        cls = char_class(word[i])

        if word[i] in (ZWJ, ZWNJ):
            # Joiner not attached to any cluster: keep as a one-char akshara.
            i += 1
            out.append(Akshara(word[start:i], offset + start, offset + i))
            continue

        if cls is CharClass.INDEPENDENT_VOWEL:
            i = absorb_joiners(i + 1)
            while _cls_at(word, i) in _MODIFIERS:
                i = absorb_joiners(i + 1)
            out.append(Akshara(word[start:i], offset + start, offset + i))
            continue

        if cls is CharClass.CONSONANT:
            dead = False
            while True:
                i = absorb_joiners(i + 1)  # past the consonant
                if _cls_at(word, i) is CharClass.NUKTA:
                    i = absorb_joiners(i + 1)
                if _cls_at(word, i) is not CharClass.VIRAMA:
                    break
                i = absorb_joiners(i + 1)  # past the virama
                nxt = _cls_at(word, i)
                if nxt is CharClass.CONSONANT:
                    continue
                if nxt is CharClass.INDEPENDENT_VOWEL:
                    raise MalformedCluster(
                        "dead consonant followed by independent vowel", offset + i
                    )
                if nxt in (
                    CharClass.DEPENDENT_VOWEL_SIGN,
                    CharClass.VIRAMA,
                    CharClass.NUKTA,
                    *_MODIFIERS,
                ):
                    raise MalformedCluster(
                        f"unexpected {nxt.value} after virama", offset + i
                    )
                dead = True  # word-final (or pre-boundary) dead consonant
                break
            if not dead:
                if _cls_at(word, i) is CharClass.DEPENDENT_VOWEL_SIGN:
                    i = absorb_joiners(i + 1)
                while _cls_at(word, i) in _MODIFIERS:
                    i = absorb_joiners(i + 1)
                if _cls_at(word, i) is CharClass.NUKTA:
                    raise MalformedCluster("nukta with no consonant base", offset + i)
            out.append(Akshara(word[start:i], offset + start, offset + i))
            continue

        if cls is CharClass.VIRAMA:
            raise MalformedCluster("virama with no consonant base", offset + i)
        if cls is CharClass.DEPENDENT_VOWEL_SIGN:
            raise MalformedCluster("vowel sign with no consonant base", offset + i)
        if cls is CharClass.NUKTA:
            raise MalformedCluster("nukta with no consonant base", offset + i)
        if cls in _MODIFIERS:
            raise MalformedCluster(f"dangling {cls.value}", offset + i)

        # Digit, punctuation, whitespace, other: degenerate one-char akshara.
        i += 1
        out.append(Akshara(word[start:i], offset + start, offset + i))

    return out
