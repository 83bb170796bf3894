"""Reference word list: membership checks and the word set used for
misspelling detection and candidate generation."""

from __future__ import annotations

import io
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from typing import BinaryIO, Iterable

from .errors import MalformedCluster, MalformedLine
from .script import ZWJ, ZWNJ, segment_aksharas


def _clean_word(word: str) -> str:
    word = unicodedata.normalize("NFC", word)
    return word.replace(ZWJ, "").replace(ZWNJ, "")


@dataclass(eq=False)
class Lexicon:
    """Immutable after load; safe to share across threads."""

    entries: dict[str, int] = field(default_factory=dict)
    skipped: int = 0  # malformed words dropped during load

    @property
    def size(self) -> int:
        return len(self.entries)

    def __contains__(self, word: str) -> bool:
        return _clean_word(word) in self.entries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lexicon):
            return NotImplemented
        return self.entries == other.entries

    __hash__ = None  # type: ignore[assignment]

    def frequency(self, word: str) -> int:
        return self.entries.get(_clean_word(word), 0)

    def words(self) -> Iterable[str]:
        return self.entries.keys()

    def serialize(self) -> str:
        return "".join(f"{w}\t{f}\n" for w, f in sorted(self.entries.items()))


def contains(lexicon: Lexicon, word: str) -> bool:
    return word in lexicon


def load_lexicon(source: str | Path | bytes | BinaryIO) -> Lexicon:
    """Load a lexicon from a path, bytes, or binary stream.

    Format: one entry per line, ``word`` or ``word<TAB>frequency``; blank
    lines and '#' comments are skipped. Words are NFC-normalized and must
    segment into aksharas; words that do not are counted in ``skipped``.
    Raises MalformedLine for undecodable bytes or bad frequency fields.
    """
    if isinstance(source, (str, Path)):
        raw = Path(source).read_bytes()
    elif isinstance(source, bytes):
        raw = source
    else:
        raw = source.read()

    entries: dict[str, int] = {}
    skipped = 0
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
        parts = line.split("\t")
        word = _clean_word(parts[0].strip())
        freq = 1
        if len(parts) > 1 and parts[1].strip():
            try:
                freq = int(parts[1].strip())
            except ValueError:
                raise MalformedLine(line_no, f"bad frequency {parts[1]!r}") from None
            if freq < 0:
                raise MalformedLine(line_no, f"negative frequency {freq}")
        try:
            if not word:
                raise MalformedCluster("empty word")
            segment_aksharas(word)
        except MalformedCluster:
            skipped += 1
            continue
        entries[word] = freq
    return Lexicon(entries=entries, skipped=skipped)


def loads(text: str) -> Lexicon:
    return load_lexicon(io.BytesIO(text.encode("utf-8")))
