from __future__ import annotations

import unicodedata

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ttsfe.pipeline import PipelineConfig, PipelineData, load_data
from ttsfe.script import ANUSVARA, CANDRABINDU, NUKTA, VIRAMA, VISARGA
from ttsfe.wx import CONSONANTS, MATRAS, VOWELS

settings.register_profile(
    "default",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

_CONS = sorted(CONSONANTS)
_IVOWELS = sorted(VOWELS)
_MATRAS = sorted(MATRAS)
_MODS = [ANUSVARA, CANDRABINDU, VISARGA]


@st.composite
def akshara_st(draw) -> str:
    """One well-formed akshara over the transliterable alphabet."""
    if draw(st.integers(0, 3)) == 0:
        parts = [draw(st.sampled_from(_IVOWELS))]
        if draw(st.integers(0, 3)) == 0:
            parts.append(draw(st.sampled_from(_MODS)))
        return "".join(parts)
    parts = []
    for _ in range(draw(st.integers(0, 2))):
        parts.append(draw(st.sampled_from(_CONS)))
        if draw(st.integers(0, 9)) == 0:
            parts.append(NUKTA)
        parts.append(VIRAMA)
    parts.append(draw(st.sampled_from(_CONS)))
    if draw(st.integers(0, 9)) == 0:
        parts.append(NUKTA)
    if draw(st.booleans()):
        parts.append(draw(st.sampled_from(_MATRAS)))
    if draw(st.integers(0, 3)) == 0:
        parts.append(draw(st.sampled_from(_MODS)))
    return "".join(parts)


@st.composite
def devanagari_word_st(draw, max_aksharas: int = 5) -> str:
    """A well-formed word in NFC (the pipeline's canonical encoding)."""
    n = draw(st.integers(1, max_aksharas))
    word = "".join(draw(akshara_st()) for _ in range(n))
    return unicodedata.normalize("NFC", word)


# Short random Devanagari-ish strings (not necessarily well-formed words).
devanagari_chars_st = st.text(
    alphabet=_CONS + _IVOWELS + _MATRAS + [VIRAMA, ANUSVARA, CANDRABINDU, VISARGA, NUKTA],
    min_size=0,
    max_size=8,
)

mixed_text_st = st.text(
    alphabet=(
        _CONS[:12]
        + _IVOWELS[:6]
        + _MATRAS[:6]
        + [VIRAMA, ANUSVARA, " ", "\t", "\n", ".", "।", ",", "!", "%", "+", "₹"]
        + list("09१९abZ")
    ),
    min_size=0,
    max_size=40,
)


@pytest.fixture(scope="session")
def data() -> PipelineData:
    return load_data()


@pytest.fixture(scope="session")
def lexicon(data):
    return data.lexicon


@pytest.fixture(scope="session")
def tables(data):
    return data.tables


@pytest.fixture(scope="session")
def config() -> PipelineConfig:
    return PipelineConfig(auto_correct=True)
