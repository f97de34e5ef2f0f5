"""Corpus BLEU, stop-word-reduced BLEU and checkpoint selection.

BLEU follows the classic corpus-level definition: clipped modified n-gram
precisions up to order 4 summed over segments, combined by geometric mean,
multiplied by the brevity penalty exp(1 - r/c) when the hypothesis is
shorter than the reference. Tokenization is whitespace splitting; inputs
are assumed pre-normalized.

Reduced BLEU deletes blacklisted stop/function words from both sides
before scoring (``side="hyp"`` preserves the hypothesis-only reading).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Literal, Sequence

from .corpus import SegmentFile

NGRAM_ORDER = 4

Smoothing = Literal["none", "exp"]


class ScoringError(ValueError):
    """Raised on misaligned or empty scoring inputs."""


@dataclass(frozen=True)
class BleuScore:
    score: float
    precisions: tuple[float, float, float, float]
    brevity_penalty: float
    hyp_len: int
    ref_len: int

    def to_dict(self) -> dict:
        return {
            "score": self.score,
            "precisions": list(self.precisions),
            "brevity_penalty": self.brevity_penalty,
            "hyp_len": self.hyp_len,
            "ref_len": self.ref_len,
        }


def _ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def bleu(hyps: SegmentFile | Sequence[str], refs: SegmentFile | Sequence[str],
         smoothing: Smoothing = "none") -> BleuScore:
    hyp_lines = list(hyps)
    ref_lines = list(refs)
    if len(hyp_lines) != len(ref_lines):
        raise ScoringError(
            f"segment count mismatch: {len(hyp_lines)} hypotheses vs "
            f"{len(ref_lines)} references")
    if not any(line.split() for line in ref_lines):
        raise ScoringError("reference corpus is empty")

    matches = [0] * NGRAM_ORDER
    totals = [0] * NGRAM_ORDER
    hyp_len = 0
    ref_len = 0
    for hyp_line, ref_line in zip(hyp_lines, ref_lines):
        hyp_tokens = hyp_line.split()
        ref_tokens = ref_line.split()
        hyp_len += len(hyp_tokens)
        ref_len += len(ref_tokens)
        for n in range(1, NGRAM_ORDER + 1):
            hyp_counts = _ngrams(hyp_tokens, n)
            if not hyp_counts:
                continue
            ref_counts = _ngrams(ref_tokens, n)
            totals[n - 1] += sum(hyp_counts.values())
            matches[n - 1] += sum(
                min(count, ref_counts[gram])
                for gram, count in hyp_counts.items())

    precisions = [0.0] * NGRAM_ORDER
    log_sum = 0.0
    zero_orders_seen = 0
    zero_score = False
    for n in range(NGRAM_ORDER):
        if totals[n] == 0:
            # No n-grams of this order exist; vacuous, excluded from the mean.
            precisions[n] = 1.0
            continue
        if matches[n] > 0:
            precisions[n] = matches[n] / totals[n]
        elif smoothing == "exp":
            precisions[n] = 1.0 / (2 ** zero_orders_seen * totals[n])
            zero_orders_seen += 1
        else:
            precisions[n] = 0.0
            zero_score = True
        if not zero_score:
            log_sum += math.log(precisions[n]) / NGRAM_ORDER

    if hyp_len == 0:
        return BleuScore(0.0, tuple(precisions), 1.0, 0, ref_len)
    bp = 1.0 if hyp_len >= ref_len else math.exp(1.0 - ref_len / hyp_len)
    score = 0.0 if zero_score else 100.0 * bp * math.exp(log_sum)
    return BleuScore(score, tuple(precisions), bp, hyp_len, ref_len)


@dataclass(frozen=True)
class StopList:
    words: frozenset[str]

    def __post_init__(self) -> None:
        for word in self.words:
            if word != word.lower() or word != word.strip() or " " in word:
                raise ValueError(f"invalid stop word: {word!r}")

    def __contains__(self, token: str) -> bool:
        return token in self.words

    def __len__(self) -> int:
        return len(self.words)

    @staticmethod
    def from_lines(lines: Iterable[str]) -> "StopList":
        """Lowercase and dedupe; apostrophized entries also contribute their
        apostrophe-stripped form ("geht's" -> "gehts")."""
        words: set[str] = set()
        for line in lines:
            word = line.strip().lower()
            if not word:
                continue
            words.add(word)
            if "'" in word:
                words.add(word.replace("'", ""))
        return StopList(frozenset(words))

    @staticmethod
    def from_file(path: str | Path) -> "StopList":
        return StopList.from_lines(
            Path(path).read_text(encoding="utf-8").splitlines())


def default_stoplist() -> StopList:
    path = resources.files("slt_toolkit.data") / "stopwords_de.txt"
    return StopList.from_lines(path.read_text(encoding="utf-8").splitlines())


def remove_stopwords(segment: str, stops: StopList) -> str:
    return " ".join(t for t in segment.split() if t.lower() not in stops)


def reduced_bleu(hyps: SegmentFile | Sequence[str],
                 refs: SegmentFile | Sequence[str], stops: StopList,
                 smoothing: Smoothing = "none",
                 side: Literal["both", "hyp"] = "both") -> BleuScore:
    filtered_hyps = [remove_stopwords(line, stops) for line in hyps]
    if side == "both":
        filtered_refs = [remove_stopwords(line, stops) for line in refs]
    else:
        filtered_refs = list(refs)
    return bleu(filtered_hyps, filtered_refs, smoothing)


def count_stopwords(hyps: SegmentFile | Sequence[str],
                    stops: StopList) -> tuple[int, float]:
    count = 0
    total = 0
    for line in hyps:
        for token in line.split():
            total += 1
            if token.lower() in stops:
                count += 1
    return count, (count / total if total else 0.0)


@dataclass(frozen=True)
class CandidateScores:
    name: str
    bleu: BleuScore
    reduced: BleuScore
    stopword_count: int
    stopword_fraction: float


@dataclass(frozen=True)
class SelectionReport:
    candidates: tuple[CandidateScores, ...]
    winner: str

    def to_dict(self) -> dict:
        return {
            "winner": self.winner,
            "candidates": [{
                "name": c.name,
                "bleu": c.bleu.to_dict(),
                "reduced_bleu": c.reduced.to_dict(),
                "stopword_count": c.stopword_count,
                "stopword_fraction": c.stopword_fraction,
            } for c in self.candidates],
        }


def select_checkpoint(candidates: Sequence[tuple[str, SegmentFile | Sequence[str]]],
                      refs: SegmentFile | Sequence[str], stops: StopList,
                      smoothing: Smoothing = "none") -> SelectionReport:
    """Rank candidates by reduced BLEU; ties break toward fewer stop words,
    then lexicographic name."""
    if not candidates:
        raise ScoringError("need at least one candidate")
    ref_lines = list(refs)
    scored: list[CandidateScores] = []
    for name, hyps in candidates:
        hyp_lines = list(hyps)
        if len(hyp_lines) != len(ref_lines):
            raise ScoringError(
                f"candidate '{name}': {len(hyp_lines)} segments vs "
                f"{len(ref_lines)} references")
        count, fraction = count_stopwords(hyp_lines, stops)
        scored.append(CandidateScores(
            name=name,
            bleu=bleu(hyp_lines, ref_lines, smoothing),
            reduced=reduced_bleu(hyp_lines, ref_lines, stops, smoothing),
            stopword_count=count,
            stopword_fraction=fraction,
        ))
    winner = min(scored, key=lambda c: (-c.reduced.score, c.stopword_count,
                                        c.name))
    return SelectionReport(tuple(scored), winner.name)
