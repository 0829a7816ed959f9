"""Per-member network construction under strict immediate adjacency."""

from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sosemnet.corpus import EMPTY_LEXICON, Document, Genre, StopwordLexicon, load_corpus
from sosemnet.normalize import ConceptToken, Token, TokenKind, normalize_document
from sosemnet.semnet import (
    build_member_network,
    canonical_pair,
    concept_labels,
    genre_occurrences,
    iter_adjacent,
    network_stats,
    singular_label,
)
from tests.conftest import DIMA_BODY, write_corpus


def fake_stream(stems: list[str | None]):
    """Build a stream from stems; None marks a break (stop word)."""
    items = []
    pos = 0
    for i, s in enumerate(stems):
        tok = Token(
            surface=s or "-", start=pos, end=pos + 1,
            sentence_index=0,
            kind=TokenKind.WORD if s else TokenKind.STOPWORD,
        )
        pos += 2
        if s is None:
            items.append(tok)
        else:
            items.append(ConceptToken(token=tok, stem=s, norm=s, language="en"))

    class Stream:
        pass

    st_ = Stream()
    st_.items = tuple(items)
    return st_


def counts(stems: list[str | None], member="M"):
    return build_member_network([fake_stream(stems)], member).associations


def test_break_and_repeat_counting():
    assert dict(counts(["x", None, "y", "x", "y"])) == {("x", "y"): 2}


def test_dima_network(dima_manifest):
    corpus = load_corpus(dima_manifest)
    doc = corpus.documents[0]
    stream = normalize_document(doc, corpus.lexicon_for("en"))
    net = build_member_network([stream], "DA")
    assert network_stats(net) == (6, 5)
    assert dict(net.associations) == {
        ("dima", "make"): 1,
        ("bad", "make"): 1,
        ("bad", "perform"): 1,
        ("dima", "perform"): 1,
        ("attract", "peopl"): 1,
    }
    assert ("perform", "attract") not in net
    assert ("attract", "perform") not in net
    assert net.occurrences == 8


def test_document_boundary_breaks_adjacency():
    net = build_member_network(
        [fake_stream(["a", "b"]), fake_stream(["c", "d"])], "M"
    )
    assert dict(net.associations) == {("a", "b"): 1, ("c", "d"): 1}
    assert ("b", "c") not in net


def test_no_self_loops():
    assert dict(counts(["x", "x", "x"])) == {}
    net = build_member_network([fake_stream(["x", "x", "y"])], "M")
    assert dict(net.associations) == {("x", "y"): 1}
    assert net.concept_counts == {"x": 2, "y": 1}


def test_empty_and_single_token_streams():
    assert dict(counts([])) == {}
    assert dict(counts(["solo"])) == {}
    assert counts(["solo"]) == {}
    net = build_member_network([fake_stream(["solo"])], "M")
    assert network_stats(net) == (1, 0)


def test_separator_tokens_break():
    items = list(fake_stream(["a", "b"]).items)
    sep = Token(surface=".", start=90, end=91, sentence_index=0,
                kind=TokenKind.SEPARATOR)
    items.insert(1, sep)

    class Stream:
        pass

    s = Stream()
    s.items = tuple(items)
    net = build_member_network([s], "M")
    assert dict(net.associations) == {}


def test_canonical_pair_ordering():
    assert canonical_pair("b", "a") == ("a", "b")
    assert canonical_pair("a", "b") == ("a", "b")
    assert dict(counts(["b", "a", "b"])) == {("a", "b"): 2}


def test_network_membership_is_order_insensitive():
    net = build_member_network([fake_stream(["p", "q"])], "M")
    assert ("p", "q") in net
    assert ("q", "p") in net
    assert ("q", "z") not in net


def test_genre_occurrences(tmp_path):
    manifest = write_corpus(
        tmp_path,
        docs=[
            {"member": "M", "body": "alpha beta", "genre": "interview", "id": "a"},
            {"member": "M", "body": "gamma delta epsilon", "genre": "conversation",
             "id": "b"},
        ],
    )
    corpus = load_corpus(manifest)
    streams = [
        normalize_document(d, EMPTY_LEXICON) for d in corpus.documents_of("M")
    ]
    got = genre_occurrences(streams)
    assert got[Genre.INTERVIEW] == 2
    assert got[Genre.CONVERSATION] == 3
    assert got.get(Genre.WRITTEN_TEXT, 0) == 0


@pytest.mark.parametrize(
    "surface,expected",
    [
        ("performances", "performance"),
        ("makes", "make"),
        ("people", "people"),
        ("glasses", "glass"),
        ("gas", "gas"),
        ("this", "this"),
        ("artists", "artist"),
        ("campus", "campus"),
        ("galleries", "gallery"),
        ("skies", "sky"),
    ],
)
def test_singular_label_english(surface, expected):
    assert singular_label(surface, "en") == expected


def test_singular_label_passthrough_russian():
    assert singular_label("перформансы", "ru") == "перформансы"


def test_concept_labels_prefers_frequent_then_short(tmp_path):
    manifest = write_corpus(
        tmp_path,
        docs=[{"member": "M", "id": "d",
               "body": "running runs running. runner ran running"}],
    )
    corpus = load_corpus(manifest)
    streams = [normalize_document(d, EMPTY_LEXICON) for d in corpus.documents]
    net = build_member_network(streams, "M")
    labels = concept_labels([net])
    # "running" occurs 3 times and wins over runs/run despite being longer
    assert labels["run"] == "running"


def test_concept_labels_gloss_override():
    net = build_member_network([fake_stream(["перформанс", "арт"])], "M")
    labels = concept_labels([net], glosses={"перформанс": "performance"})
    assert labels["перформанс"] == "performance"
    assert labels["арт"] == "арт"


def test_iter_adjacent_pairs():
    stream = fake_stream(["a", "b", None, "c", "d"])
    got = [(p.stem, c.stem) for p, c in iter_adjacent(stream.items)]
    assert got == [("a", "b"), ("c", "d")]


# property: network equals a brute-force scan over consecutive concept pairs


def brute_force(stems: list[str | None]) -> Counter:
    tally: Counter = Counter()
    for prev, cur in zip(stems, stems[1:]):
        if prev is None or cur is None or prev == cur:
            continue
        tally[canonical_pair(prev, cur)] += 1
    return tally


stream_strategy = st.lists(
    st.one_of(st.none(), st.sampled_from([f"s{i}" for i in range(12)])),
    max_size=60,
)


@settings(max_examples=400, deadline=None)
@given(stream_strategy)
def test_matches_brute_force_pair_scan(stems):
    assert dict(counts(stems)) == dict(brute_force(stems))


@settings(max_examples=200, deadline=None)
@given(stream_strategy)
def test_reversal_symmetry(stems):
    assert dict(counts(stems)) == dict(counts(list(reversed(stems))))


@settings(max_examples=200, deadline=None)
@given(stream_strategy, stream_strategy)
def test_stream_concatenation_with_break_adds(s1, s2):
    separate = Counter(counts(s1)) + Counter(counts(s2))
    joined = counts(s1 + [None] + s2)
    assert dict(joined) == {k: v for k, v in separate.items() if v}


@settings(max_examples=200, deadline=None)
@given(stream_strategy)
def test_relabeling_permutes_network(stems):
    mapping = {f"s{i}": f"t{(i + 5) % 12}" for i in range(12)}
    renamed = [None if s is None else mapping[s] for s in stems]
    base = counts(stems)
    moved = counts(renamed)
    expect = Counter()
    for (x, y), n in base.items():
        expect[canonical_pair(mapping[x], mapping[y])] += n
    assert dict(moved) == {k: v for k, v in expect.items() if v}
