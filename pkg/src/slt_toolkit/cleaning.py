"""Sentence-level filtering of noisy subtitle annotation.

Rules, applied in fixed order per utterance:
  1. ASTERISK_SOUND   strip spans enclosed by asterisk pairs (sound cues)
  2. HASHTAG_START    drop lines starting with '#'
  3. STATUS_MESSAGE   drop subtitling-agency boilerplate
  4. FOREIGN_SENTENCE drop lines identified as French/English

An utterance whose text is empty or whitespace after stripping sound cues
is dropped outright.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path

from .corpus import Corpus, Utterance


class RuleName(Enum):
    FOREIGN_SENTENCE = "FOREIGN_SENTENCE"
    HASHTAG_START = "HASHTAG_START"
    STATUS_MESSAGE = "STATUS_MESSAGE"
    ASTERISK_SOUND = "ASTERISK_SOUND"


class RuleAction(Enum):
    DROP_UTTERANCE = "DROP_UTTERANCE"
    STRIP_SPAN = "STRIP_SPAN"


_RULE_ACTIONS = {
    RuleName.FOREIGN_SENTENCE: RuleAction.DROP_UTTERANCE,
    RuleName.HASHTAG_START: RuleAction.DROP_UTTERANCE,
    RuleName.STATUS_MESSAGE: RuleAction.DROP_UTTERANCE,
    RuleName.ASTERISK_SOUND: RuleAction.STRIP_SPAN,
}


@dataclass(frozen=True)
class CleanRule:
    name: RuleName

    @property
    def action(self) -> RuleAction:
        return _RULE_ACTIONS[self.name]


class Verdict(Enum):
    KEPT = "KEPT"
    DROPPED = "DROPPED"
    EDITED = "EDITED"


@dataclass(frozen=True)
class CleanOutcome:
    id: str
    verdict: Verdict
    hits: tuple[tuple[RuleName, str], ...] = ()
    text: str | None = None  # surviving (possibly edited) text, None if dropped


class Language(Enum):
    DE = "DE"
    FR = "FR"
    EN = "EN"


@dataclass(frozen=True)
class LanguageProfile:
    language: Language
    function_words: frozenset[str]

    def __post_init__(self) -> None:
        if not self.function_words:
            raise ValueError(f"empty function-word set for {self.language}")


def _load_wordlist(name: str) -> frozenset[str]:
    path = resources.files("slt_toolkit.data") / name
    words = (w.strip().lower() for w in path.read_text(encoding="utf-8").splitlines())
    return frozenset(w for w in words if w)


def default_profiles() -> list[LanguageProfile]:
    return [
        LanguageProfile(Language.DE, _load_wordlist("stopwords_de.txt")),
        LanguageProfile(Language.FR, _load_wordlist("function_words_fr.txt")),
        LanguageProfile(Language.EN, _load_wordlist("function_words_en.txt")),
    ]


# The three agency boilerplate literals known to occur in the data.
DEFAULT_STATUS_PATTERNS = (
    "1:1-Untertitelung.",
    "Livepassagen können Fehler enthalten.",
    "Mit Live-Untertiteln von SWISS TXT",
)

DEFAULT_FOREIGN_THRESHOLD = 0.3

_ASTERISK_SPAN_RE = re.compile(r"\*[^*]*\*")


def detect_language(text: str,
                    profiles: list[LanguageProfile]) -> tuple[Language, dict[Language, float]]:
    """Score = fraction of whitespace tokens found in each profile's word set.

    Returns the argmax language; ties (including empty text) break toward DE.
    """
    tokens = text.lower().split()
    scores: dict[Language, float] = {}
    for profile in profiles:
        if tokens:
            hits = sum(1 for t in tokens if t in profile.function_words)
            scores[profile.language] = hits / len(tokens)
        else:
            scores[profile.language] = 0.0
    best = Language.DE
    best_score = scores.get(Language.DE, 0.0)
    for lang, score in scores.items():
        if score > best_score:
            best, best_score = lang, score
    return best, scores


def match_status_message(text: str, patterns: list[str] | tuple[str, ...]) -> bool:
    """True if the trimmed text is a pattern, or a pattern plus trailing
    punctuation/whitespace only."""
    trimmed = text.strip()
    for pattern in patterns:
        if trimmed == pattern:
            return True
        if trimmed.startswith(pattern):
            tail = trimmed[len(pattern):]
            if tail and all(not ch.isalnum() for ch in tail):
                return True
    return False


def strip_asterisk_spans(text: str) -> tuple[str, list[str]]:
    """Remove *...* spans (non-greedy pairs); unpaired '*' is left alone."""
    matches = _ASTERISK_SPAN_RE.findall(text)
    if not matches:
        return text, []
    stripped = _ASTERISK_SPAN_RE.sub(" ", text)
    return " ".join(stripped.split()), matches


@dataclass(frozen=True)
class CleanConfig:
    status_patterns: tuple[str, ...] = DEFAULT_STATUS_PATTERNS
    foreign_threshold: float = DEFAULT_FOREIGN_THRESHOLD
    enabled: frozenset[RuleName] = frozenset(RuleName)

    @staticmethod
    def from_json(path: str | Path) -> "CleanConfig":
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
        return CleanConfig(
            status_patterns=tuple(obj.get("status_patterns",
                                          DEFAULT_STATUS_PATTERNS)),
            foreign_threshold=float(obj.get("foreign_threshold",
                                            DEFAULT_FOREIGN_THRESHOLD)),
            enabled=frozenset(RuleName(r) for r in obj.get(
                "enabled_rules", [r.value for r in RuleName])),
        )


DEFAULT_RULES = tuple(CleanRule(name) for name in (
    RuleName.ASTERISK_SOUND, RuleName.HASHTAG_START,
    RuleName.STATUS_MESSAGE, RuleName.FOREIGN_SENTENCE))


def _clean_one(utt: Utterance, rules: tuple[CleanRule, ...],
               profiles: list[LanguageProfile],
               cfg: CleanConfig) -> CleanOutcome:
    text = utt.text
    hits: list[tuple[RuleName, str]] = []
    edited = False
    rule_names = [r.name for r in rules if r.name in cfg.enabled]

    if RuleName.ASTERISK_SOUND in rule_names:
        text, spans = strip_asterisk_spans(text)
        if spans:
            edited = True
            hits.extend((RuleName.ASTERISK_SOUND, s) for s in spans)
            if not text.strip():
                # Sound cue was the whole line; nothing left to keep.
                return CleanOutcome(utt.id, Verdict.DROPPED, tuple(hits))

    if RuleName.HASHTAG_START in rule_names and text.lstrip().startswith("#"):
        hits.append((RuleName.HASHTAG_START, text.strip()))
        return CleanOutcome(utt.id, Verdict.DROPPED, tuple(hits))

    if RuleName.STATUS_MESSAGE in rule_names and match_status_message(
            text, cfg.status_patterns):
        hits.append((RuleName.STATUS_MESSAGE, text.strip()))
        return CleanOutcome(utt.id, Verdict.DROPPED, tuple(hits))

    if RuleName.FOREIGN_SENTENCE in rule_names:
        lang, scores = detect_language(text, profiles)
        if lang is not Language.DE and scores[lang] >= cfg.foreign_threshold:
            hits.append((RuleName.FOREIGN_SENTENCE, text.strip()))
            return CleanOutcome(utt.id, Verdict.DROPPED, tuple(hits))

    verdict = Verdict.EDITED if edited else Verdict.KEPT
    return CleanOutcome(utt.id, verdict, tuple(hits), text=text)


def clean_corpus(corpus: Corpus,
                 rules: tuple[CleanRule, ...] = DEFAULT_RULES,
                 profiles: list[LanguageProfile] | None = None,
                 cfg: CleanConfig = CleanConfig()) -> tuple[Corpus, list[CleanOutcome]]:
    """Apply cleaning rules per utterance; survivors keep their input order."""
    if not rules:
        raise ValueError("rules must be nonempty")
    if profiles is None:
        profiles = default_profiles()
    outcomes = [_clean_one(u, rules, profiles, cfg) for u in corpus]
    survivors = tuple(
        Utterance(u.id, o.text, u.source, u.duration_s)
        for u, o in zip(corpus, outcomes) if o.verdict is not Verdict.DROPPED)
    return Corpus(survivors), outcomes


def write_clean_report(outcomes: list[CleanOutcome], path: str | Path) -> None:
    lines = []
    for o in outcomes:
        lines.append(json.dumps({
            "id": o.id,
            "verdict": o.verdict.value,
            "hits": [[name.value, span] for name, span in o.hits],
        }, ensure_ascii=False))
    Path(path).write_text("".join(line + "\n" for line in lines),
                          encoding="utf-8")
