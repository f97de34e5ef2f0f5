"""Tests for subtitle cleaning rules and language detection."""

import random

from slt_toolkit.cleaning import (
    CleanConfig,
    Language,
    LanguageProfile,
    RuleName,
    Verdict,
    clean_corpus,
    default_profiles,
    detect_language,
    match_status_message,
    strip_asterisk_spans,
    DEFAULT_STATUS_PATTERNS,
)
from slt_toolkit.corpus import Corpus, Utterance


def _corpus(texts):
    return Corpus(tuple(Utterance(f"u{i}", t) for i, t in enumerate(texts)))


def test_status_message_dropped():
    corpus = _corpus(["Mit Live-Untertiteln von SWISS TXT"])
    cleaned, outcomes = clean_corpus(corpus)
    assert len(cleaned) == 0
    assert outcomes[0].verdict is Verdict.DROPPED
    assert outcomes[0].hits[0][0] is RuleName.STATUS_MESSAGE


def test_sound_only_line_dropped():
    corpus = _corpus(["* Beschwingte Blasmusik *"])
    cleaned, outcomes = clean_corpus(corpus)
    assert len(cleaned) == 0
    assert outcomes[0].verdict is Verdict.DROPPED
    assert outcomes[0].hits[0][0] is RuleName.ASTERISK_SOUND


def test_hashtag_dropped():
    cleaned, outcomes = clean_corpus(_corpus(["#Wetter morgen schön"]))
    assert len(cleaned) == 0
    assert outcomes[0].hits[0][0] is RuleName.HASHTAG_START


def test_plain_line_kept():
    cleaned, outcomes = clean_corpus(_corpus(["hallo welt"]))
    assert len(cleaned) == 1
    assert outcomes[0].verdict is Verdict.KEPT
    assert outcomes[0].hits == ()


def test_embedded_sound_cue_edited():
    corpus = _corpus(["Guten Abend *Musik* liebe Zuschauer"])
    cleaned, outcomes = clean_corpus(corpus)
    assert outcomes[0].verdict is Verdict.EDITED
    assert cleaned.utterances[0].text == "Guten Abend liebe Zuschauer"
    assert "*" not in cleaned.utterances[0].text


def test_unpaired_asterisk_untouched():
    text, spans = strip_asterisk_spans("ein * allein")
    assert text == "ein * allein"
    assert spans == []


def test_asterisk_pairs_nongreedy():
    text, spans = strip_asterisk_spans("*a* mitte *b*")
    assert text == "mitte"
    assert spans == ["*a*", "*b*"]


def test_order_preserved_and_one_outcome_each():
    texts = ["eins zwei", "#drop", "drei vier", "*nur musik*", "fünf"]
    corpus = _corpus(texts)
    cleaned, outcomes = clean_corpus(corpus)
    assert [o.id for o in outcomes] == [u.id for u in corpus]
    surviving_ids = [u.id for u in cleaned]
    assert surviving_ids == ["u0", "u2", "u4"]


def test_detect_language_german():
    lang, scores = detect_language("der hund ist auf dem tisch",
                                   default_profiles())
    assert lang is Language.DE
    # der, ist, auf, dem are function words; hund/tisch are not
    assert abs(scores[Language.DE] - 4 / 6) < 1e-12


def test_detect_language_empty_defaults_de():
    lang, scores = detect_language("", default_profiles())
    assert lang is Language.DE
    assert all(v == 0.0 for v in scores.values())


def test_detect_language_english():
    lang, scores = detect_language("the cat is on the mat",
                                   default_profiles())
    assert lang is Language.EN
    # the, is, on, the in the EN list; cat/mat not
    assert abs(scores[Language.EN] - 4 / 6) < 1e-12


def test_foreign_sentence_dropped_conservatively():
    cleaned, outcomes = clean_corpus(
        _corpus(["the cat is on the mat", "Katze Hund Tisch"]))
    assert [u.id for u in cleaned] == ["u1"]
    assert outcomes[0].hits[0][0] is RuleName.FOREIGN_SENTENCE


def test_de_only_tokens_detected_as_de():
    profiles = default_profiles()
    de_words = sorted(profiles[0].function_words)[:20]
    lang, _ = detect_language(" ".join(de_words), profiles)
    assert lang is Language.DE


def test_match_status_message():
    assert match_status_message("1:1-Untertitelung.", DEFAULT_STATUS_PATTERNS)
    assert match_status_message("Livepassagen können Fehler enthalten.",
                                DEFAULT_STATUS_PATTERNS)
    assert match_status_message("Mit Live-Untertiteln von SWISS TXT ...",
                                DEFAULT_STATUS_PATTERNS)
    assert not match_status_message("Untertitelung ist wichtig",
                                    DEFAULT_STATUS_PATTERNS)


def test_adding_patterns_is_monotone():
    texts = ["Programmhinweis", "hallo welt", "noch ein satz"]
    base = CleanConfig()
    extended = CleanConfig(
        status_patterns=base.status_patterns + ("Programmhinweis",))
    kept_base = len(clean_corpus(_corpus(texts), cfg=base)[0])
    kept_ext = len(clean_corpus(_corpus(texts), cfg=extended)[0])
    assert kept_ext <= kept_base
    assert kept_ext == 2


def test_clean_config_from_json(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text('{"status_patterns": ["Nur dieses"], '
                    '"foreign_threshold": 0.5, '
                    '"enabled_rules": ["STATUS_MESSAGE"]}', encoding="utf-8")
    cfg = CleanConfig.from_json(path)
    assert cfg.status_patterns == ("Nur dieses",)
    assert cfg.foreign_threshold == 0.5
    assert cfg.enabled == frozenset({RuleName.STATUS_MESSAGE})
    cleaned, _ = clean_corpus(_corpus(["Nur dieses", "#bleibt jetzt"]),
                              cfg=cfg)
    assert [u.text for u in cleaned] == ["#bleibt jetzt"]


def test_determinism():
    rng = random.Random(7)
    texts = [" ".join(rng.choice(["der", "hund", "#x", "*y*", "welt"])
                      for _ in range(rng.randrange(1, 6)))
             for _ in range(200)]
    corpus = _corpus(texts)
    first = clean_corpus(corpus)
    second = clean_corpus(corpus)
    assert [u.text for u in first[0]] == [u.text for u in second[0]]
    assert first[1] == second[1]
