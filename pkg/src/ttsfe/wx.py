"""Reversible Devanagari ↔ WX transliteration.

The mapping is orthographic: every consonant without a virama or vowel sign
emits its inherent 'a', a virama suppresses it, and nasal/visarga marks keep
dedicated letters ('z' anusvara, 'M' candrabindu, 'H' visarga) so the mapping
stays injective and ``from_wx`` is an exact left inverse of ``to_wx``.
"""

from __future__ import annotations

import unicodedata
from importlib import resources

from .errors import UnmappableChar, UnparseableWx
from .script import (
    ANUSVARA,
    CANDRABINDU,
    NUKTA,
    VIRAMA,
    VISARGA,
    ZWJ,
    ZWNJ,
    CharClass,
    char_class,
    segment_aksharas,
)

VOWELS = {
    "अ": "a",
    "आ": "A",
    "इ": "i",
    "ई": "I",
    "उ": "u",
    "ऊ": "U",
    "ऋ": "q",
    "ए": "e",
    "ऐ": "E",
    "ओ": "o",
    "औ": "O",
    "ऑ": "oY",  # candra o; 'Y' marks the candra shape
}

# Vowel signs map to the same letters; the sign for 'a' is the absence of one.
MATRAS = {
    "ा": "A",  # ा
    "ि": "i",  # ि
    "ी": "I",  # ी
    "ु": "u",  # ु
    "ू": "U",  # ू
    "ृ": "q",  # ृ
    "े": "e",  # े
    "ै": "E",  # ै
    "ॉ": "oY",  # ॉ
    "ो": "o",  # ो
    "ौ": "O",  # ौ
}

CONSONANTS = {
    "क": "k", "ख": "K", "ग": "g", "घ": "G", "ङ": "f",
    "च": "c", "छ": "C", "ज": "j", "झ": "J", "ञ": "F",
    "ट": "t", "ठ": "T", "ड": "d", "ढ": "D", "ण": "N",
    "त": "w", "थ": "W", "द": "x", "ध": "X", "न": "n",
    "प": "p", "फ": "P", "ब": "b", "भ": "B", "म": "m",
    "य": "y", "र": "r", "ल": "l", "व": "v",
    "श": "S", "ष": "R", "स": "s", "ह": "h",
}

MARKS = {
    ANUSVARA: "z",
    CANDRABINDU: "M",
    VISARGA: "H",
}

NUKTA_LETTER = "Z"

WX_VOWEL_CHARS = frozenset("aAiIuUeEoOq")
WX_CONSONANT_CHARS = frozenset(CONSONANTS.values())
WX_MARK_CHARS = frozenset(MARKS.values())
WX_ALPHABET = WX_VOWEL_CHARS | WX_CONSONANT_CHARS | WX_MARK_CHARS | {NUKTA_LETTER, "Y"}

_FROM_VOWEL = {v: k for k, v in VOWELS.items()}
_FROM_MATRA = {v: k for k, v in MATRAS.items()}
_FROM_CONSONANT = {v: k for k, v in CONSONANTS.items()}
_FROM_MARK = {v: k for k, v in MARKS.items()}

# Nukta letters whose composed form survives NFC (ऩ ऱ ऴ): transliterate via
# their base-plus-nukta decomposition so one table row covers both spellings.
_DECOMPOSE_NUKTA = {
    ord(chr(cp)): unicodedata.normalize("NFD", chr(cp))
    for cp in range(0x0915, 0x093A)
    if unicodedata.normalize("NFD", chr(cp)) != chr(cp)
}


def to_wx(word: str) -> str:
    """Transliterate one well-formed Devanagari word to WX.

    Raises MalformedCluster for unparseable clusters and UnmappableChar for
    letters outside the table (rare vowels, unsupported signs).
    """
    word = unicodedata.normalize("NFC", word).translate(_DECOMPOSE_NUKTA)
    out: list[str] = []
    for akshara in segment_aksharas(word):
        chars = [c for c in akshara.text if c not in (ZWJ, ZWNJ)]
        j = 0
        while j < len(chars):
            ch = chars[j]
            cls = char_class(ch)
            if cls is CharClass.INDEPENDENT_VOWEL:
                if ch not in VOWELS:
                    raise UnmappableChar(ch, akshara.start)
                out.append(VOWELS[ch])
                j += 1
            elif cls is CharClass.CONSONANT:
                if ch not in CONSONANTS:
                    raise UnmappableChar(ch, akshara.start)
                out.append(CONSONANTS[ch])
                j += 1
                if j < len(chars) and chars[j] == NUKTA:
                    out.append(NUKTA_LETTER)
                    j += 1
                if j < len(chars) and chars[j] == VIRAMA:
                    j += 1  # inherent vowel suppressed
                elif j < len(chars) and char_class(chars[j]) is CharClass.DEPENDENT_VOWEL_SIGN:
                    if chars[j] not in MATRAS:
                        raise UnmappableChar(chars[j], akshara.start)
                    out.append(MATRAS[chars[j]])
                    j += 1
                else:
                    out.append("a")
            elif ch in MARKS:
                out.append(MARKS[ch])
                j += 1
            else:
                raise UnmappableChar(ch, akshara.start)
    return "".join(out)


def from_wx(s: str) -> str:
    """Decode a WX string back to Devanagari (exact inverse on to_wx output).

    A consonant letter followed by another consonant or by end of string
    re-inserts a virama; a vowel letter right after a consonant becomes a
    vowel sign ('a' becomes the bare consonant). Raises UnparseableWx for
    strings outside the image grammar.
    """
    out: list[str] = []
    i = 0
    n = len(s)

    def take_vowel(j: int) -> tuple[str, int]:
        v = s[j]
        if j + 1 < n and s[j + 1] == "Y":
            if v != "o":
                raise UnparseableWx("'Y' may only follow 'o'", j + 1)
            return "oY", j + 2
        return v, j + 1

    def take_marks(j: int) -> int:
        while j < n and s[j] in WX_MARK_CHARS:
            out.append(_FROM_MARK[s[j]])
            j += 1
        return j

    while i < n:
        ch = s[i]
        if ch in WX_CONSONANT_CHARS:
            out.append(_FROM_CONSONANT[ch])
            i += 1
            if i < n and s[i] == NUKTA_LETTER:
                out.append(NUKTA)
                i += 1
            if i >= n or s[i] in WX_CONSONANT_CHARS:
                out.append(VIRAMA)  # dead consonant or cluster continues
                continue
            if s[i] in WX_VOWEL_CHARS:
                wx_vowel, i = take_vowel(i)
                if wx_vowel != "a":
                    out.append(_FROM_MATRA[wx_vowel])
                i = take_marks(i)
                continue
            raise UnparseableWx(f"unexpected {s[i]!r} after consonant", i)
        if ch in WX_VOWEL_CHARS:
            wx_vowel, i = take_vowel(i)
            out.append(_FROM_VOWEL[wx_vowel])
            i = take_marks(i)
            continue
        raise UnparseableWx(f"unexpected {ch!r}", i)

    # NFC so nukta letters come back in their canonical composed spelling.
    return unicodedata.normalize("NFC", "".join(out))


def table_rows() -> list[tuple[str, str, str]]:
    """The mapping as (devanagari, wx, class) rows, in a fixed order."""
    rows: list[tuple[str, str, str]] = []
    rows += [(d, w, "vowel") for d, w in VOWELS.items()]
    rows += [(d, w, "matra") for d, w in MATRAS.items()]
    rows += [(d, w, "consonant") for d, w in CONSONANTS.items()]
    rows += [(d, w, "mark") for d, w in MARKS.items()]
    rows.append((NUKTA, NUKTA_LETTER, "nukta"))
    return rows


def dump_table() -> str:
    lines = ["# devanagari\twx\tclass"]
    lines += [f"{d}\t{w}\t{c}" for d, w, c in table_rows()]
    return "\n".join(lines) + "\n"


def load_table(text: str) -> list[tuple[str, str, str]]:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        dev, wx_str, cls = line.split("\t")
        rows.append((dev, wx_str, cls))
    return rows


def shipped_table() -> list[tuple[str, str, str]]:
    text = resources.files("ttsfe.data").joinpath("wx_table.tsv").read_text("utf-8")
    return load_table(text)
