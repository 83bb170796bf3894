from __future__ import annotations

import pytest
from hypothesis import given

from conftest import devanagari_word_st
from ttsfe.errors import MalformedCluster, UnmappableChar, UnparseableWx
from ttsfe.script import VIRAMA, CharClass, char_class
from ttsfe.wx import (
    WX_ALPHABET,
    WX_CONSONANT_CHARS,
    dump_table,
    from_wx,
    load_table,
    shipped_table,
    table_rows,
    to_wx,
)

GOLD = {
    "आपका": "ApakA",
    "ध्यान": "XyAna",
    "अ": "a",
    "बिजली": "bijalI",
    "आतंकवादी": "AwazkavAxI",  # anusvara stays 'z' at the orthographic level
    "सन्": "san",
    "कृपा": "kqpA",
    "डॉक्टर": "doYktara",
    "ज़रा": "jZarA",
    "दुःख": "xuHKa",
    "हाँ": "hAM",
    "मैं": "mEz",
}


@pytest.mark.parametrize(("word", "wx"), GOLD.items())
def test_known_transliterations(word, wx):
    assert to_wx(word) == wx


@pytest.mark.parametrize(("word", "wx"), GOLD.items())
def test_known_inverses(word, wx):
    assert from_wx(wx) == word


def test_unmappable_letters_raise():
    with pytest.raises(UnmappableChar):
        to_wx("ऌ")
    with pytest.raises(UnmappableChar):
        to_wx("कॄ")  # vocalic RR sign has no mapping


def test_malformed_cluster_propagates():
    with pytest.raises(MalformedCluster):
        to_wx("्क")


def test_digits_are_not_transliterable():
    with pytest.raises(UnmappableChar):
        to_wx("क1")


@pytest.mark.parametrize("bad", ["x!", "Zk", "kY", "Ya", "zk", "kz"])
def test_from_wx_rejects_non_image_strings(bad):
    with pytest.raises(UnparseableWx):
        from_wx(bad)


def test_output_alphabet():
    for word in GOLD:
        assert set(to_wx(word)) <= WX_ALPHABET


@given(devanagari_word_st())
def test_round_trip_random_words(word):
    assert from_wx(to_wx(word)) == word


def test_round_trip_full_lexicon(lexicon):
    bad = [w for w in lexicon.words() if from_wx(to_wx(w)) != w]
    assert bad == []


@given(devanagari_word_st())
def test_inherent_schwa_count(word):
    # One 'a' per consonant that carries neither a virama nor a vowel sign;
    # in the output those are exactly the 'a's sitting right after a
    # consonant letter (or its nukta suffix).
    wx = to_wx(word)
    expected = 0
    for i, ch in enumerate(word):
        if char_class(ch) is not CharClass.CONSONANT:
            continue
        j = i + 1
        if j < len(word) and char_class(word[j]) is CharClass.NUKTA:
            j += 1
        if j < len(word) and (
            word[j] == VIRAMA or char_class(word[j]) is CharClass.DEPENDENT_VOWEL_SIGN
        ):
            continue
        expected += 1
    emitters = WX_CONSONANT_CHARS | {"Z"}
    got = sum(
        1 for i, ch in enumerate(wx) if ch == "a" and i > 0 and wx[i - 1] in emitters
    )
    assert got == expected


def test_table_file_matches_code(tmp_path):
    assert shipped_table() == table_rows()
    dumped = dump_table()
    assert load_table(dumped) == table_rows()
