"""Command line interface wiring the toolkit together as subcommands.

Every subcommand is a thin delegator around the library: it loads the
input files, calls the corresponding function and serializes the result.
Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import cleaning, frameplan, itn, metrics, stats
from .corpus import CorpusError, load_corpus, load_segments, write_corpus, \
    write_segments
from .normalize import AbbrevTable, NormConfig, default_abbrev_table, \
    normalize_text

SCHEMA_VERSION = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(1)


def _stoplist(args) -> metrics.StopList:
    path = getattr(args, "stoplist", None) or os.environ.get("SLT_STOPLIST")
    if path:
        return metrics.StopList.from_file(path)
    return metrics.default_stoplist()


def _print_bleu(result: metrics.BleuScore, as_json: bool) -> None:
    if as_json:
        print(json.dumps(result.to_dict()))
    else:
        precisions = "/".join(f"{p:.3f}" for p in result.precisions)
        print(f"score {result.score:.2f}  (precisions {precisions}, "
              f"BP {result.brevity_penalty:.4f}, "
              f"hyp_len {result.hyp_len}, ref_len {result.ref_len})")


def _cmd_clean(args) -> int:
    corpus = load_corpus(args.input)
    cfg = cleaning.CleanConfig.from_json(args.config) if args.config \
        else cleaning.CleanConfig()
    cleaned, outcomes = cleaning.clean_corpus(corpus, cfg=cfg)
    write_corpus(cleaned, args.output)
    if args.report:
        cleaning.write_clean_report(outcomes, args.report)
    kept = sum(1 for o in outcomes if o.verdict is not cleaning.Verdict.DROPPED)
    print(f"kept {kept}/{len(outcomes)} utterances", file=sys.stderr)
    return 0


def _cmd_normalize(args) -> int:
    segments = load_segments(args.input)
    table = AbbrevTable.from_tsv(args.abbrev) if args.abbrev \
        else default_abbrev_table()
    cfg = NormConfig(
        expand_abbrev=not args.no_abbrev,
        strip_punct=not args.no_punct,
        lowercase=not args.no_lowercase,
        expand_numbers=not args.no_numbers,
        expand_dates=not args.no_dates,
    )
    write_segments([normalize_text(line, table, cfg) for line in segments],
                   args.output)
    return 0


def _cmd_stats(args) -> int:
    corpus = load_corpus(args.input)
    result = stats.vocab_stats(corpus)
    if args.compare:
        other = stats.vocab_stats(load_corpus(args.compare))
        deltas = stats.compare_stats(result, other)
        if args.json:
            print(json.dumps({
                "schema_version": SCHEMA_VERSION,
                "raw": result.to_dict(),
                "clean": other.to_dict(),
                "deltas": [vars(d) | {} for d in deltas],
            }))
        else:
            print(stats.format_comparison_table(deltas))
    elif args.json:
        print(json.dumps({"schema_version": SCHEMA_VERSION} | result.to_dict()))
    else:
        print(stats.format_stats_table(result))
    return 0


def _cmd_bleu(args) -> int:
    hyps = load_segments(args.hyp)
    refs = load_segments(args.ref)
    _print_bleu(metrics.bleu(hyps, refs, args.smoothing), args.json)
    return 0


def _cmd_reduced_bleu(args) -> int:
    hyps = load_segments(args.hyp)
    refs = load_segments(args.ref)
    result = metrics.reduced_bleu(hyps, refs, _stoplist(args),
                                  args.smoothing, side=args.reduced_side)
    _print_bleu(result, args.json)
    return 0


def _cmd_select(args) -> int:
    refs = load_segments(args.ref)
    candidates = []
    for spec in args.hyp:
        name, _, path = spec.partition("=")
        if not path:
            name, path = Path(spec).stem, spec
        candidates.append((name, load_segments(path)))
    report = metrics.select_checkpoint(candidates, refs, _stoplist(args),
                                       args.smoothing)
    if args.json:
        print(json.dumps({"schema_version": SCHEMA_VERSION} | report.to_dict()))
    else:
        for c in report.candidates:
            print(f"{c.name}: BLEU {c.bleu.score:.2f}  "
                  f"reduced {c.reduced.score:.2f}  "
                  f"stopwords {c.stopword_count} ({c.stopword_fraction:.1%})")
        print(f"winner: {report.winner}")
    return 0


def _cmd_itn(args) -> int:
    segments = load_segments(args.input)
    write_segments([itn.restore_display(line) for line in segments],
                   args.output)
    return 0


def _cmd_plan(args) -> int:
    win = frameplan.WindowSpec(window=args.window, stride=args.stride)
    if args.frames is not None:
        plan = frameplan.plan_windows(args.frames, win)
        print(json.dumps(plan.to_dict()))
        return 0
    lines = []
    for lineno, line in enumerate(
            Path(args.manifest).read_text(encoding="utf-8").splitlines(),
            start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            plan = frameplan.plan_windows(
                int(obj["frame_count"]), win,
                width=obj.get("width"), height=obj.get("height"))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise CorpusError(f"manifest line {lineno}: {exc}") from exc
        lines.append(json.dumps({"id": obj["id"]} | plan.to_dict()))
    output = "".join(line + "\n" for line in lines)
    if args.output:
        Path(args.output).write_text(output, encoding="utf-8")
    else:
        sys.stdout.write(output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="slt",
                     description="Subtitle corpus cleaning and evaluation "
                                 "toolkit for sign language translation")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("clean", help="filter noisy utterances from a corpus")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", dest="output", required=True)
    p.add_argument("--report", help="write per-utterance outcomes as JSONL")
    p.add_argument("--config", help="cleaning config JSON")
    p.set_defaults(func=_cmd_clean)

    p = sub.add_parser("normalize", help="normalize segment text")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", dest="output", required=True)
    p.add_argument("--abbrev", help="abbreviation table TSV")
    p.add_argument("--no-abbrev", action="store_true")
    p.add_argument("--no-punct", action="store_true")
    p.add_argument("--no-lowercase", action="store_true")
    p.add_argument("--no-numbers", action="store_true")
    p.add_argument("--no-dates", action="store_true")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("stats", help="vocabulary/singleton/hour statistics")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--compare", help="second corpus to diff against")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_stats)

    for name, func in (("bleu", _cmd_bleu), ("reduced-bleu", _cmd_reduced_bleu)):
        p = sub.add_parser(name, help=f"corpus-level {name} score")
        p.add_argument("--hyp", required=True)
        p.add_argument("--ref", required=True)
        p.add_argument("--smoothing", choices=["none", "exp"], default="none")
        p.add_argument("--json", action="store_true")
        if name == "reduced-bleu":
            p.add_argument("--stoplist")
            p.add_argument("--reduced-side", choices=["both", "hyp"],
                           default="both")
        p.set_defaults(func=func)

    p = sub.add_parser("select", help="pick a checkpoint by reduced BLEU")
    p.add_argument("--ref", required=True)
    p.add_argument("--hyp", action="append", required=True,
                   metavar="NAME=PATH")
    p.add_argument("--stoplist")
    p.add_argument("--smoothing", choices=["none", "exp"], default="none")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_select)

    p = sub.add_parser("itn", help="restore display formatting")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", dest="output", required=True)
    p.set_defaults(func=_cmd_itn)

    p = sub.add_parser("plan", help="feature-window plans for frame counts")
    p.add_argument("--manifest", help="JSONL of id/frame_count/width/height")
    p.add_argument("--out", dest="output")
    p.add_argument("--frames", type=int, help="plan a single frame count")
    p.add_argument("--window", type=int, default=64)
    p.add_argument("--stride", type=int, default=8)
    p.set_defaults(func=_cmd_plan)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "plan" and not args.frames and not args.manifest:
        parser.error("plan requires --manifest or --frames")
    try:
        return args.func(args)
    except (CorpusError, metrics.ScoringError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
