"""Vocabulary, singleton and duration statistics per corpus source.

Tokenization is whitespace-only, so the numbers are meaningful on raw as
well as normalized text. The total slice is computed on the union of all
utterances, not by summing per-source values: a word that is a singleton
in two sources separately is not a singleton overall.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .corpus import Corpus, Source, Utterance


@dataclass(frozen=True)
class SliceStats:
    video_count: int
    hours: float
    vocabulary: int
    singletons: int


@dataclass(frozen=True)
class CorpusStats:
    per_source: dict[Source, SliceStats]
    total: SliceStats

    def to_dict(self) -> dict:
        out = {src.value: vars(stats) | {}
               for src, stats in self.per_source.items()}
        out["Total"] = vars(self.total) | {}
        return out


def _slice_stats(utterances: Iterable[Utterance]) -> SliceStats:
    freqs: Counter = Counter()
    count = 0
    seconds = 0.0
    for utt in utterances:
        count += 1
        freqs.update(utt.text.split())
        if utt.duration_s is not None:
            seconds += utt.duration_s
    singletons = sum(1 for f in freqs.values() if f == 1)
    return SliceStats(video_count=count, hours=seconds / 3600.0,
                      vocabulary=len(freqs), singletons=singletons)


def vocab_stats(corpus: Corpus) -> CorpusStats:
    per_source = {}
    for source in Source:
        members = [u for u in corpus if u.source is source]
        if members:
            per_source[source] = _slice_stats(members)
    return CorpusStats(per_source=per_source,
                       total=_slice_stats(corpus))


_FIELDS = ("video_count", "hours", "vocabulary", "singletons")


@dataclass(frozen=True)
class FieldDelta:
    field: str
    raw: float
    clean: float
    delta: float
    pct: float  # percentage change relative to raw; 0 when raw is 0
    increased: bool  # negative reductions are legal but worth flagging


def compare_stats(raw: CorpusStats, clean: CorpusStats) -> list[FieldDelta]:
    """Per-field absolute and percentage deltas on the total slice."""
    deltas = []
    for field in _FIELDS:
        r = getattr(raw.total, field)
        c = getattr(clean.total, field)
        delta = c - r
        pct = (delta / r * 100.0) if r else 0.0
        deltas.append(FieldDelta(field, r, c, delta, pct, increased=delta > 0))
    return deltas


def format_stats_table(stats: CorpusStats) -> str:
    sources = sorted(stats.per_source, key=lambda s: s.value)
    header = ["", *[s.value for s in sources], "Total"]
    rows = [header]
    columns = [*[stats.per_source[s] for s in sources], stats.total]
    rows.append(["Videos", *[str(c.video_count) for c in columns]])
    rows.append(["Hours", *[f"{c.hours:.1f}" for c in columns]])
    rows.append(["Vocabulary", *[str(c.vocabulary) for c in columns]])
    rows.append(["Singletons", *[str(c.singletons) for c in columns]])
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    return "\n".join(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip()
        for row in rows)


def format_comparison_table(deltas: list[FieldDelta]) -> str:
    lines = [f"{'':<12}{'raw':>10}{'clean':>10}{'delta':>10}{'pct':>9}"]
    for d in deltas:
        value = f"{d.delta:+.1f}" if isinstance(d.raw, float) and d.field == "hours" \
            else f"{d.delta:+.0f}"
        flag = "  (increase)" if d.increased else ""
        raw_s = f"{d.raw:.1f}" if d.field == "hours" else f"{d.raw:.0f}"
        clean_s = f"{d.clean:.1f}" if d.field == "hours" else f"{d.clean:.0f}"
        lines.append(
            f"{d.field:<12}{raw_s:>10}{clean_s:>10}{value:>10}"
            f"{d.pct:>+8.1f}%{flag}")
    return "\n".join(lines)
