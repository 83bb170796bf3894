"""Grapheme-to-phoneme conversion.

A word goes through three steps: orthographic WX transliteration, nasal mark
resolution (anusvara/candrabindu become 'n', or 'm' before a labial), then
schwa deletion. Schwa deletion applies two rules:

  final: a word-final 'a' is dropped unless it is the word's only vowel
  medial: scanning right to left, an 'a' flanked by single consonants with
      vowels beyond them (V C a C V) is dropped; the right context is
      checked against the already-edited string

A vowel-nasal-consonant sequence is treated as a nasalized vowel plus nasal
coda: the coda is transparent when looking left for the flanking vowel, and
a nasalized 'a' itself is never dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import UnparseableWx
from .wx import WX_CONSONANT_CHARS, WX_VOWEL_CHARS, to_wx

_LABIALS = frozenset("pPbBm")
_NASAL_MARKS = frozenset("zM")
_VISARGA = "H"
_NUKTA = "Z"
_CANDRA = "Y"


class SegmentKind(Enum):
    CONSONANT = "consonant"
    VOWEL = "vowel"
    NASALIZED_VOWEL = "nasalized_vowel"


@dataclass(frozen=True)
class Segment:
    text: str
    kind: SegmentKind


@dataclass(frozen=True)
class PhonemeString:
    value: str
    segments: tuple[Segment, ...]

    def __str__(self) -> str:
        return self.value


def resolve_nasals(s: str) -> str:
    """Replace anusvara 'z' and candrabindu 'M' with a nasal consonant:
    'm' when the next letter is labial, otherwise (including word-finally)
    'n'."""
    out = []
    for i, ch in enumerate(s):
        if ch in _NASAL_MARKS:
            nxt = s[i + 1] if i + 1 < len(s) else ""
            out.append("m" if nxt in _LABIALS else "n")
        else:
            out.append(ch)
    return "".join(out)


class _Unit:
    __slots__ = ("text", "is_vowel", "nasalized", "coda")

    def __init__(self, text: str, is_vowel: bool):
        self.text = text
        self.is_vowel = is_vowel
        self.nasalized = False  # vowel carrying a nasal coda
        self.coda = False  # nasal consonant realizing the preceding vowel's nasality


def _parse_units(s: str) -> list[_Unit]:
    units: list[_Unit] = []
    i = 0
    n = len(s)
    while i < n:
        ch = s[i]
        if ch in WX_CONSONANT_CHARS:
            if i + 1 < n and s[i + 1] == _NUKTA:
                units.append(_Unit(s[i : i + 2], False))
                i += 2
            else:
                units.append(_Unit(ch, False))
                i += 1
        elif ch == _VISARGA:
            units.append(_Unit(ch, False))
            i += 1
        elif ch in WX_VOWEL_CHARS:
            if ch == "o" and i + 1 < n and s[i + 1] == _CANDRA:
                units.append(_Unit(s[i : i + 2], True))
                i += 2
            else:
                units.append(_Unit(ch, True))
                i += 1
        else:
            raise UnparseableWx(f"unexpected {ch!r} in phoneme input", i)
    return units


def _mark_nasal_codas(units: list[_Unit]) -> None:
    # A plain n/m between a vowel and a consonant spells vowel nasality
    # (the anusvara pattern); flags are fixed before any deletion happens.
    for i in range(1, len(units) - 1):
        unit = units[i]
        if (
            unit.text in ("n", "m")
            and units[i - 1].is_vowel
            and not units[i + 1].is_vowel
        ):
            unit.coda = True
            units[i - 1].nasalized = True


def delete_schwas(s: str) -> PhonemeString:
    """Apply schwa deletion to a WX string with nasals already resolved."""
    units = _parse_units(s)
    _mark_nasal_codas(units)

    vowel_count = sum(1 for u in units if u.is_vowel)
    if (
        len(units) >= 2
        and units[-1].is_vowel
        and units[-1].text == "a"
        and not units[-1].nasalized
        and not units[-2].is_vowel  # an inherent schwa, not a written final अ
        and vowel_count > 1
    ):
        del units[-1]

    for i in range(len(units) - 1, -1, -1):
        unit = units[i]
        if not unit.is_vowel or unit.text != "a" or unit.nasalized:
            continue
        if i < 2 or i + 2 >= len(units):
            continue
        left_c = units[i - 1]
        beyond = units[i - 2]
        left_ok = (
            not left_c.is_vowel
            and not left_c.coda
            and (beyond.is_vowel or beyond.coda)
        )
        right_ok = not units[i + 1].is_vowel and units[i + 2].is_vowel
        if left_ok and right_ok:
            del units[i]

    segments = tuple(
        Segment(
            u.text,
            SegmentKind.NASALIZED_VOWEL
            if u.is_vowel and u.nasalized
            else (SegmentKind.VOWEL if u.is_vowel else SegmentKind.CONSONANT),
        )
        for u in units
    )
    return PhonemeString("".join(u.text for u in units), segments)


def g2p(word: str) -> PhonemeString:
    """Phonemes for one Devanagari word; raises MalformedCluster or
    UnmappableChar for words the transliterator cannot handle."""
    return delete_schwas(resolve_nasals(to_wx(word)))
