"""Quote extraction: every sentence context in which a concept or an
association is instantiated, with member/genre/offset provenance.

Hits are produced by the same adjacency iterator the network builder uses,
so hit totals always equal association counts.  Spans are byte offsets
into the document body; the context is the exact byte slice of the
containing sentence (optionally widened by N sentences either side).
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .corpus import Corpus
from .errors import UnknownConcept, UnknownMember
from .normalize import (
    DEFAULT_SEPARATORS,
    ConceptToken,
    normalize_document,
    sentence_spans,
)
from .semnet import canonical_pair, iter_adjacent


@dataclass(frozen=True)
class ConcordanceHit:
    doc_id: str
    member_id: str
    genre: str
    sentence_index: int
    span: tuple[int, int]
    context: str
    context_span: tuple[int, int]
    matched: tuple[str, str] | str


def _scope_members(corpus: Corpus, scope: Iterable[str] | None) -> list[str]:
    if scope is None:
        return sorted(corpus.members)
    members = []
    for m in scope:
        if m not in corpus.members:
            raise UnknownMember(m)
        members.append(m)
    return sorted(set(members))


def _trim(body_bytes: bytes, start: int, end: int) -> tuple[str, tuple[int, int]]:
    """Sentence slice with surrounding whitespace trimmed, offsets adjusted."""
    chunk = body_bytes[start:end]
    lstripped = chunk.lstrip()
    start += len(chunk) - len(lstripped)
    stripped = lstripped.rstrip()
    end = start + len(stripped)
    return stripped.decode("utf-8"), (start, end)


def _context(
    doc_body: str,
    sentence: int,
    spans: list[tuple[int, int]],
    widen: int,
) -> tuple[str, tuple[int, int]]:
    lo = max(0, sentence - widen)
    hi = min(len(spans) - 1, sentence + widen)
    start = spans[lo][0]
    end = spans[hi][1]
    return _trim(doc_body.encode("utf-8"), start, end)


def _scan(
    corpus: Corpus,
    members: list[str],
    separators: str,
    comma_breaks: bool,
):
    for member in members:
        for doc in corpus.documents:
            if doc.member_id != member:
                continue
            stream = normalize_document(
                doc,
                corpus.lexicon_for(doc.language),
                separators=separators,
                comma_breaks=comma_breaks,
            )
            spans = sentence_spans(doc.body, separators, comma_breaks)
            yield doc, stream, spans


def find_association(
    corpus: Corpus,
    a: str,
    b: str,
    scope: Iterable[str] | None = None,
    context_sentences: int = 0,
    separators: str = DEFAULT_SEPARATORS,
    comma_breaks: bool = False,
) -> list[ConcordanceHit]:
    """One hit per adjacency event of the (a, b) association, ordered by
    member, document, offset.  UnknownConcept if a stem never occurs in
    the scoped corpus."""
    pair = canonical_pair(a, b)
    members = _scope_members(corpus, scope)
    hits: list[ConcordanceHit] = []
    seen_stems: set[str] = set()
    for doc, stream, spans in _scan(corpus, members, separators, comma_breaks):
        for item in stream.items:
            if isinstance(item, ConceptToken):
                seen_stems.add(item.stem)
        for prev, cur in iter_adjacent(stream.items):
            if canonical_pair(prev.stem, cur.stem) != pair or prev.stem == cur.stem:
                continue
            sentence = prev.token.sentence_index
            context, context_span = _context(
                doc.body, sentence, spans, context_sentences
            )
            hits.append(
                ConcordanceHit(
                    doc_id=doc.doc_id,
                    member_id=doc.member_id,
                    genre=doc.genre.value,
                    sentence_index=sentence,
                    span=(prev.token.start, cur.token.end),
                    context=context,
                    context_span=context_span,
                    matched=pair,
                )
            )
    for stem_ in pair:
        if stem_ not in seen_stems:
            raise UnknownConcept(stem_)
    return hits


def find_concept(
    corpus: Corpus,
    c: str,
    scope: Iterable[str] | None = None,
    context_sentences: int = 0,
    separators: str = DEFAULT_SEPARATORS,
    comma_breaks: bool = False,
) -> list[ConcordanceHit]:
    """One hit per occurrence of the concept, ordered like find_association."""
    members = _scope_members(corpus, scope)
    hits: list[ConcordanceHit] = []
    for doc, stream, spans in _scan(corpus, members, separators, comma_breaks):
        for item in stream.items:
            if not isinstance(item, ConceptToken) or item.stem != c:
                continue
            sentence = item.token.sentence_index
            context, context_span = _context(
                doc.body, sentence, spans, context_sentences
            )
            hits.append(
                ConcordanceHit(
                    doc_id=doc.doc_id,
                    member_id=doc.member_id,
                    genre=doc.genre.value,
                    sentence_index=sentence,
                    span=(item.token.start, item.token.end),
                    context=context,
                    context_span=context_span,
                    matched=c,
                )
            )
    if not hits:
        raise UnknownConcept(c)
    return hits
