"""Non-word error detection and ranked correction suggestions.

Distance is unrestricted Damerau-Levenshtein (insert, delete, substitute,
adjacent transposition, unit costs) over the NFC codepoints, which is a true
metric. Candidates come from a symmetric-delete index (every lexicon word is
filed under all strings reachable by up to two deletions; a query probes its
own delete variants, and hits are verified with the exact distance). The
index is an optimization only: results must equal a brute-force scan of the
lexicon.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass

from .lexicon import Lexicon
from .tokens import Token, TokenKind, tokenize

_INDEX_ATTR = "_suggest_index"


def edit_distance(a: str, b: str, *, cap: int | None = None) -> int:
    """Damerau-Levenshtein distance between the NFC forms of a and b.

    With ``cap`` set, computation is banded and abandons early: the result
    is exact when it is <= cap, and cap + 1 otherwise.
    """
    a = unicodedata.normalize("NFC", a)
    b = unicodedata.normalize("NFC", b)
    la, lb = len(a), len(b)
    if cap is not None and abs(la - lb) > cap:
        return cap + 1
    if la == 0:
        return lb
    if lb == 0:
        return la

    inf = la + lb
    # Lowrance-Wagner with a sentinel border row/column at index 0. Cells
    # outside the |i-j| <= cap band stay inf; their true values exceed cap,
    # so dropping them cannot disturb any result that is <= cap.
    d = [[inf] * (lb + 2) for _ in range(la + 2)]
    for i in range(la + 1):
        d[i + 1][1] = i
    for j in range(lb + 1):
        d[1][j + 1] = j

    last_row: dict[str, int] = {}
    for i in range(1, la + 1):
        ch_a = a[i - 1]
        if cap is None:
            j_lo, j_hi = 1, lb
        else:
            j_lo, j_hi = max(1, i - cap), min(lb, i + cap)
        last_match_col = 0
        row, prev_row = d[i + 1], d[i]
        best = inf
        for j in range(j_lo, j_hi + 1):
            ch_b = b[j - 1]
            r = last_row.get(ch_b, 0)
            c = last_match_col
            if ch_a == ch_b:
                cost = 0
                last_match_col = j
            else:
                cost = 1
            value = min(
                prev_row[j] + cost,  # substitute / match
                row[j] + 1,  # insert
                prev_row[j + 1] + 1,  # delete
                d[r][c] + (i - r - 1) + 1 + (j - c - 1),  # transpose
            )
            row[j + 1] = value
            if value < best:
                best = value
        last_row[ch_a] = i
        # Costs along any alignment only grow: once the whole band exceeds
        # cap, nothing below can come back under it.
        if cap is not None and best > cap:
            return cap + 1

    result = d[la + 1][lb + 1]
    if cap is not None and result > cap:
        return cap + 1
    return result


def _delete_variants(word: str, depth: int) -> set[str]:
    """All strings reachable from ``word`` by removing up to ``depth`` chars."""
    variants = {word}
    frontier = {word}
    for _ in range(depth):
        frontier = {
            s[:i] + s[i + 1 :] for s in frontier if s for i in range(len(s))
        }
        variants |= frontier
    return variants


class DeletionIndex:
    """Symmetric-delete candidate index (SymSpell style).

    Any pair within Damerau-Levenshtein distance d <= depth shares at least
    one common delete variant, so probing the query's variants yields a
    candidate superset; every hit is then verified with the exact (capped)
    distance.
    """

    def __init__(self, words=(), depth: int = 2):
        self.depth = depth
        self.buckets: dict[str, list[str]] = {}
        for w in words:
            self.add(w)

    def add(self, word: str) -> None:
        for variant in _delete_variants(word, self.depth):
            self.buckets.setdefault(variant, []).append(word)

    def search(self, query: str, max_distance: int) -> list[tuple[str, int]]:
        """All (word, distance) pairs with distance <= max_distance, which
        must not exceed the index depth."""
        if max_distance > self.depth:
            raise ValueError(f"index depth {self.depth} < {max_distance}")
        seen: set[str] = set()
        hits: list[tuple[str, int]] = []
        for variant in _delete_variants(query, max_distance):
            for word in self.buckets.get(variant, ()):
                if word in seen:
                    continue
                seen.add(word)
                dist = edit_distance(query, word, cap=max_distance)
                if dist <= max_distance:
                    hits.append((word, dist))
        return hits


def _search_candidates(
    lexicon: Lexicon, query: str, max_distance: int
) -> list[tuple[str, int]]:
    if max_distance > 2:
        # Rarely requested; a verified linear scan keeps the index small.
        hits = []
        for w in lexicon.words():
            dist = edit_distance(query, w, cap=max_distance)
            if dist <= max_distance:
                hits.append((w, dist))
        return hits
    index = getattr(lexicon, _INDEX_ATTR, None)
    if index is None:
        # Benign race under concurrent first use: both builds are identical.
        index = DeletionIndex(lexicon.words(), depth=2)
        setattr(lexicon, _INDEX_ATTR, index)
    return index.search(query, max_distance)


@dataclass(frozen=True)
class Misspelling:
    token: Token
    reason: str = "not_in_lexicon"


@dataclass(frozen=True)
class Suggestion:
    candidate: str
    distance: int
    frequency: int
    rank: int


def check(tokens: list[Token], lexicon: Lexicon) -> list[Misspelling]:
    """One Misspelling per Word token absent from the lexicon; other token
    kinds are never flagged."""
    return [
        Misspelling(tok)
        for tok in tokens
        if tok.kind is TokenKind.WORD and tok.text not in lexicon
    ]


def suggest(
    word: str, lexicon: Lexicon, k: int = 5, max_distance: int = 2
) -> list[Suggestion]:
    """Top-k lexicon words within max_distance of ``word``, ordered by
    (distance asc, frequency desc, codepoint order asc)."""
    if k < 1 or max_distance < 1:
        raise ValueError("k and max_distance must be >= 1")
    query = unicodedata.normalize("NFC", word)
    hits = _search_candidates(lexicon, query, max_distance)
    hits.sort(key=lambda h: (h[1], -lexicon.frequency(h[0]), h[0]))
    return [
        Suggestion(w, dist, lexicon.frequency(w), rank)
        for rank, (w, dist) in enumerate(hits[:k], start=1)
    ]


@dataclass(frozen=True)
class AutoCorrectResult:
    corrected: str
    applied: tuple[tuple[tuple[int, int], str], ...]
    unresolved: tuple[Token, ...]


def auto_correct(
    text: str, lexicon: Lexicon, *, max_distance: int = 2, k: int = 5
) -> AutoCorrectResult:
    """Replace flagged words that have a unique distance-1 suggestion.

    Anything else (no candidates, several distance-1 candidates, nearest
    candidate at distance > 1) is left as-is and reported unresolved.
    Non-word spans are copied through unchanged, so applying the result
    again is a no-op.
    """
    tokens = tokenize(text)
    applied: list[tuple[tuple[int, int], str]] = []
    unresolved: list[Token] = []
    pieces: list[str] = []
    for tok in tokens:
        if tok.kind is not TokenKind.WORD or tok.text in lexicon:
            pieces.append(tok.text)
            continue
        options = suggest(tok.text, lexicon, k=max(k, 2), max_distance=max_distance)
        unique_at_one = (
            bool(options)
            and options[0].distance == 1
            and (len(options) == 1 or options[1].distance > 1)
        )
        if unique_at_one:
            pieces.append(options[0].candidate)
            applied.append((tok.span, options[0].candidate))
        else:
            pieces.append(tok.text)
            unresolved.append(tok)
    return AutoCorrectResult("".join(pieces), tuple(applied), tuple(unresolved))
