"""Text frontend for Hindi speech synthesis: Devanagari tokenization, spell
suggestion, non-standard-word expansion, WX transliteration, and rule-based
grapheme-to-phoneme conversion with schwa deletion."""

from .errors import (
    ConfigError,
    FrontendError,
    MalformedCluster,
    MalformedLine,
    NotASuggestion,
    OutOfRange,
    UnknownSpan,
    UnmappableChar,
    UnparseableWx,
)
from .g2p import PhonemeString, delete_schwas, g2p, resolve_nasals
from .lexicon import Lexicon, load_lexicon
from .normalize import (
    NswClass,
    classify_nsw,
    expand_abbreviation,
    expand_number,
    normalize_text,
)
from .pipeline import (
    AnalysisReport,
    PipelineConfig,
    PipelineData,
    analyze,
    apply_suggestion,
    load_data,
)
from .script import Akshara, CharClass, DevChar, classify_char, segment_aksharas
from .spellcheck import Suggestion, auto_correct, check, edit_distance, suggest
from .tokens import Token, TokenKind, tokenize
from .wx import from_wx, to_wx

__version__ = "0.1.0"

__all__ = [
    "Akshara",
    "AnalysisReport",
    "CharClass",
    "ConfigError",
    "DevChar",
    "FrontendError",
    "Lexicon",
    "MalformedCluster",
    "MalformedLine",
    "NotASuggestion",
    "NswClass",
    "OutOfRange",
    "PhonemeString",
    "PipelineConfig",
    "PipelineData",
    "Suggestion",
    "Token",
    "TokenKind",
    "UnknownSpan",
    "UnmappableChar",
    "UnparseableWx",
    "analyze",
    "apply_suggestion",
    "auto_correct",
    "check",
    "classify_char",
    "classify_nsw",
    "delete_schwas",
    "edit_distance",
    "expand_abbreviation",
    "expand_number",
    "from_wx",
    "g2p",
    "load_data",
    "load_lexicon",
    "normalize_text",
    "resolve_nasals",
    "segment_aksharas",
    "suggest",
    "to_wx",
    "tokenize",
]
