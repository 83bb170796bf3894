"""End-to-end analysis: tokenize, flag and (optionally) correct misspellings,
expand non-standard words, transliterate, phonemize, and assemble the report
exchanged by the CLI, the HTTP service, and the UI."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    ConfigError,
    FrontendError,
    MalformedLine,
    NotASuggestion,
    UnknownSpan,
)
from .g2p import g2p
from .lexicon import Lexicon, load_lexicon
from .normalize import (
    DEFAULT_YEAR_TRIGGERS,
    NormalizeTables,
    load_abbreviations,
    load_number_names,
    load_symbols,
    normalize_text,
)
from .spellcheck import Suggestion, check, suggest
from .tokens import Token, TokenKind, tokenize
from .wx import to_wx

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class PipelineConfig:
    top_k: int = 5
    max_distance: int = 2
    auto_correct: bool = True
    allow_free_choice: bool = False
    year_triggers: tuple[str, ...] = DEFAULT_YEAR_TRIGGERS


def data_dir() -> Path:
    env = os.environ.get("TTSFE_DATA_DIR")
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "data"


@dataclass
class PipelineData:
    lexicon: Lexicon
    tables: NormalizeTables


def load_data(
    base_dir: str | Path | None = None,
    *,
    lexicon_path: str | Path | None = None,
    abbrev_path: str | Path | None = None,
    numbers_path: str | Path | None = None,
    symbols_path: str | Path | None = None,
) -> PipelineData:
    """Load the lexicon and expansion tables, defaulting to the shipped
    fixtures; raises ConfigError when a file is missing or unparseable."""
    base = Path(base_dir) if base_dir is not None else data_dir()

    def pick(override, name) -> Path:
        path = Path(override) if override is not None else base / name
        if not path.is_file():
            raise ConfigError(f"data file not found: {path}")
        return path

    try:
        lexicon = load_lexicon(pick(lexicon_path, "lexicon.tsv"))
        tables = NormalizeTables(
            numbers=load_number_names(pick(numbers_path, "numbers.tsv")),
            abbreviations=load_abbreviations(pick(abbrev_path, "abbreviations.tsv")),
            symbols=load_symbols(pick(symbols_path, "symbols.tsv")),
        )
    except MalformedLine as exc:
        raise ConfigError(f"bad data file: {exc}") from exc
    return PipelineData(lexicon=lexicon, tables=tables)


@dataclass(frozen=True)
class MisspellingReport:
    span: tuple[int, int]
    text: str
    suggestions: tuple[Suggestion, ...]


@dataclass(frozen=True)
class UnresolvedItem:
    kind: str  # ambiguous_correction | no_suggestion | unknown_abbreviation |
    # number_out_of_range | unphonemizable_word
    span: tuple[int, int]
    text: str
    detail: str = ""


@dataclass(frozen=True)
class AnalysisReport:
    source: str
    tokens: tuple[Token, ...]
    misspellings: tuple[MisspellingReport, ...]
    corrected: str
    applied: tuple[tuple[tuple[int, int], str], ...]
    normalized: tuple[str, ...]
    wx: tuple[str | None, ...]
    phoneme_words: tuple[str | None, ...]
    phonemes: str
    unresolved: tuple[UnresolvedItem, ...]
    schema_version: str = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "source": self.source,
            "tokens": [
                {"text": t.text, "kind": t.kind.value, "span": [t.start, t.end]}
                for t in self.tokens
            ],
            "misspellings": [
                {
                    "span": list(m.span),
                    "text": m.text,
                    "suggestions": [
                        {
                            "candidate": s.candidate,
                            "distance": s.distance,
                            "frequency": s.frequency,
                            "rank": s.rank,
                        }
                        for s in m.suggestions
                    ],
                }
                for m in self.misspellings
            ],
            "corrected": self.corrected,
            "applied": [
                {"span": list(span), "replacement": repl} for span, repl in self.applied
            ],
            "normalized": list(self.normalized),
            "wx": list(self.wx),
            "phonemes": {"words": list(self.phoneme_words), "sentence": self.phonemes},
            "unresolved": [
                {"kind": u.kind, "span": list(u.span), "text": u.text, "detail": u.detail}
                for u in self.unresolved
            ],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, **kwargs)

    @classmethod
    def from_dict(cls, doc: dict) -> "AnalysisReport":
        return cls(
            schema_version=doc["schema_version"],
            source=doc["source"],
            tokens=tuple(
                Token(t["text"], TokenKind(t["kind"]), t["span"][0], t["span"][1])
                for t in doc["tokens"]
            ),
            misspellings=tuple(
                MisspellingReport(
                    span=tuple(m["span"]),
                    text=m["text"],
                    suggestions=tuple(
                        Suggestion(
                            s["candidate"], s["distance"], s["frequency"], s["rank"]
                        )
                        for s in m["suggestions"]
                    ),
                )
                for m in doc["misspellings"]
            ),
            corrected=doc["corrected"],
            applied=tuple(
                (tuple(a["span"]), a["replacement"]) for a in doc["applied"]
            ),
            normalized=tuple(doc["normalized"]),
            wx=tuple(doc["wx"]),
            phoneme_words=tuple(doc["phonemes"]["words"]),
            phonemes=doc["phonemes"]["sentence"],
            unresolved=tuple(
                UnresolvedItem(u["kind"], tuple(u["span"]), u["text"], u["detail"])
                for u in doc["unresolved"]
            ),
        )

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls.from_dict(json.loads(text))


def _correction_for(m: MisspellingReport) -> str | None:
    """The unique distance-1 candidate, or None when the correction is not
    safe to apply automatically."""
    s = m.suggestions
    if s and s[0].distance == 1 and (len(s) == 1 or s[1].distance > 1):
        return s[0].candidate
    return None


def analyze(text: str, config: PipelineConfig, data: PipelineData) -> AnalysisReport:
    """Run the full pipeline over raw text.

    Stage order is fixed: tokenize, spellcheck (correcting only when
    configured), normalize, transliterate, phonemize. Per-word failures are
    recorded under ``unresolved`` and never abort the report; phonemes are
    always computed from the corrected, normalized text.
    """
    tokens = tuple(tokenize(text))
    unresolved: list[UnresolvedItem] = []

    misspellings = []
    for miss in check(list(tokens), data.lexicon):
        # Rank at least two candidates so unique-distance-1 is decidable.
        options = suggest(
            miss.token.text,
            data.lexicon,
            k=max(config.top_k, 2),
            max_distance=config.max_distance,
        )
        misspellings.append(
            MisspellingReport(
                span=miss.token.span,
                text=miss.token.text,
                suggestions=tuple(options[: config.top_k]),
            )
        )

    applied: list[tuple[tuple[int, int], str]] = []
    corrected = text
    if config.auto_correct:
        for m in reversed(misspellings):  # right-to-left keeps spans valid
            choice = _correction_for(m)
            if choice is None:
                kind = "no_suggestion" if not m.suggestions else "ambiguous_correction"
                unresolved.append(UnresolvedItem(kind, m.span, m.text))
                continue
            corrected = corrected[: m.span[0]] + choice + corrected[m.span[1] :]
            applied.append((m.span, choice))
        applied.reverse()
        unresolved.reverse()

    normalized_result = normalize_text(
        list(tokenize(corrected)), data.tables, config.year_triggers
    )
    for tok, reason in normalized_result.flagged:
        unresolved.append(UnresolvedItem(reason, tok.span, tok.text))

    normalized: list[str] = []
    wx_words: list[str | None] = []
    phoneme_words: list[str | None] = []
    for tok in normalized_result.tokens:
        if tok.kind is not TokenKind.WORD:
            continue
        normalized.append(tok.text)
        try:
            wx_words.append(to_wx(tok.text))
            phoneme_words.append(g2p(tok.text).value)
        except FrontendError as exc:
            wx_words.append(None)
            phoneme_words.append(None)
            unresolved.append(
                UnresolvedItem("unphonemizable_word", tok.span, tok.text, str(exc))
            )

    return AnalysisReport(
        source=text,
        tokens=tokens,
        misspellings=tuple(misspellings),
        corrected=corrected,
        applied=tuple(applied),
        normalized=tuple(normalized),
        wx=tuple(wx_words),
        phoneme_words=tuple(phoneme_words),
        phonemes=" ".join(p for p in phoneme_words if p is not None),
        unresolved=tuple(unresolved),
    )


def apply_suggestion(
    report: AnalysisReport,
    span: tuple[int, int],
    chosen: str,
    config: PipelineConfig,
    data: PipelineData,
) -> AnalysisReport:
    """Re-analyze the report's source with ``chosen`` replacing the flagged
    span. The span must identify a current misspelling (UnknownSpan) and the
    word must be one of its suggestions, or any lexicon word when free choice
    is enabled (NotASuggestion)."""
    span = (int(span[0]), int(span[1]))
    target = next((m for m in report.misspellings if m.span == span), None)
    if target is None:
        raise UnknownSpan(f"no flagged misspelling at {span}")
    if chosen == target.text:
        return report
    if config.allow_free_choice:
        if chosen not in data.lexicon:
            raise NotASuggestion(f"{chosen!r} is not a lexicon word")
    elif chosen not in {s.candidate for s in target.suggestions}:
        raise NotASuggestion(f"{chosen!r} is not a suggestion for {target.text!r}")
    new_text = report.source[: span[0]] + chosen + report.source[span[1] :]
    return analyze(new_text, config, data)
