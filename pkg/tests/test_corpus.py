"""Tests for corpus and segment file I/O."""

import pytest

from slt_toolkit.corpus import (
    Corpus,
    CorpusError,
    Source,
    Utterance,
    load_corpus,
    load_segments,
    write_corpus,
    write_segments,
)


def test_load_corpus_basic(tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text('{"id":"a","text":"hallo"}\n'
                    '{"id":"b","text":"welt","duration_s":2.0}\n',
                    encoding="utf-8")
    corpus = load_corpus(path)
    assert len(corpus) == 2
    assert corpus.utterances[0].id == "a"
    assert corpus.utterances[0].text == "hallo"
    assert corpus.utterances[0].source is Source.OTHER
    assert corpus.utterances[1].duration_s == 2.0


def test_load_corpus_empty(tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text("", encoding="utf-8")
    assert len(load_corpus(path)) == 0


def test_load_corpus_duplicate_id(tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text('{"id":"a","text":"x"}\n{"id":"a","text":"y"}\n',
                    encoding="utf-8")
    with pytest.raises(CorpusError, match="duplicate id 'a'.*1.*2"):
        load_corpus(path)


def test_load_corpus_malformed_line_names_lineno(tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text('{"id":"a","text":"x"}\n{oops\n', encoding="utf-8")
    with pytest.raises(CorpusError, match="line 2"):
        load_corpus(path)


def test_load_corpus_invalid_utf8(tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_bytes(b'{"id":"a","text":"\xff"}\n')
    with pytest.raises(CorpusError, match="UTF-8"):
        load_corpus(path)


def test_load_corpus_unknown_fields_ignored(tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text('{"id":"a","text":"x","extra":[1,2]}\n', encoding="utf-8")
    assert load_corpus(path).utterances[0].text == "x"


def test_corpus_roundtrip(tmp_path):
    corpus = Corpus((
        Utterance("a", "tab\there \"quoted\"", Source.SRF, 1.5),
        Utterance("b", "zweite zeile", Source.FN),
    ))
    path = tmp_path / "out.jsonl"
    write_corpus(corpus, path)
    loaded = load_corpus(path)
    for orig, back in zip(corpus, loaded):
        assert (orig.id, orig.text, orig.source, orig.duration_s) == \
               (back.id, back.text, back.source, back.duration_s)


def test_negative_duration_rejected():
    with pytest.raises(CorpusError):
        Utterance("a", "x", duration_s=-1.0)


def test_load_segments_basic(tmp_path):
    path = tmp_path / "s.txt"
    path.write_text("a b\nc d\n", encoding="utf-8")
    assert list(load_segments(path)) == ["a b", "c d"]


def test_load_segments_empty_file(tmp_path):
    path = tmp_path / "s.txt"
    path.write_text("", encoding="utf-8")
    assert list(load_segments(path)) == []


def test_load_segments_preserves_empty_lines(tmp_path):
    path = tmp_path / "s.txt"
    path.write_text("x\n\ny", encoding="utf-8")
    assert list(load_segments(path)) == ["x", "", "y"]


def test_load_segments_crlf(tmp_path):
    path = tmp_path / "s.txt"
    path.write_bytes(b"a b\r\nc d\r\n")
    assert list(load_segments(path)) == ["a b", "c d"]


def test_segments_roundtrip(tmp_path):
    lines = ["erste", "", "  mit rand  ", "letzte"]
    path = tmp_path / "s.txt"
    write_segments(lines, path)
    assert list(load_segments(path)) == lines
