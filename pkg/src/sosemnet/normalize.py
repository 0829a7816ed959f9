"""Tokenization, stop-word marking, and concept-stream production.

Words are maximal runs of letters/digits joined by internal apostrophes or
hyphens.  Characters of the separator class (default ``. ! ? ; :`` plus
newlines) form Separator tokens, one per maximal run; everything else is a
skipped span.  Token offsets are byte offsets into the UTF-8 encoding of
the document body, so downstream quote spans index the original bytes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from enum import Enum
from functools import lru_cache

from . import stemming
from .corpus import Document, StopwordLexicon, fold_apostrophes

DEFAULT_SEPARATORS = ".!?;:"


class TokenKind(Enum):
    WORD = "Word"
    STOPWORD = "StopWord"
    SEPARATOR = "Separator"


@dataclass(frozen=True)
class Token:
    surface: str
    start: int
    end: int
    sentence_index: int
    kind: TokenKind


@dataclass(frozen=True)
class ConceptToken:
    token: Token
    stem: str
    norm: str  # lowercase, apostrophes folded, possessive stripped
    language: str


@dataclass(frozen=True)
class NormalizedDocument:
    document: Document
    items: tuple[ConceptToken | Token, ...]

    def concept_tokens(self) -> tuple[ConceptToken, ...]:
        return tuple(i for i in self.items if isinstance(i, ConceptToken))


@lru_cache(maxsize=16)
def _patterns(separators: str, comma_breaks: bool) -> re.Pattern[str]:
    sep_chars = separators + ("," if comma_breaks else "") + "\r\n"
    sep_class = re.escape(sep_chars)
    word = r"[^\W_]+(?:['’-][^\W_]+)*"
    return re.compile(rf"(?P<word>{word})|(?P<sep>[{sep_class}]+)")


def tokenize(
    body: str,
    language: str = "und",
    *,
    separators: str = DEFAULT_SEPARATORS,
    comma_breaks: bool = False,
) -> list[Token]:
    # the word/separator grammar is language independent; the tag is part
    # of the operation signature so callers stay explicit about provenance
    del language
    pattern = _patterns(separators, comma_breaks)
    tokens: list[Token] = []
    sentence = 0
    char_pos = 0
    byte_pos = 0
    for m in pattern.finditer(body):
        start_c, end_c = m.span()
        byte_pos += len(body[char_pos:start_c].encode("utf-8"))
        start_b = byte_pos
        byte_pos += len(body[start_c:end_c].encode("utf-8"))
        char_pos = end_c
        if m.lastgroup == "word":
            tokens.append(
                Token(
                    surface=m.group(),
                    start=start_b,
                    end=byte_pos,
                    sentence_index=sentence,
                    kind=TokenKind.WORD,
                )
            )
        else:
            tokens.append(
                Token(
                    surface=m.group(),
                    start=start_b,
                    end=byte_pos,
                    sentence_index=sentence,
                    kind=TokenKind.SEPARATOR,
                )
            )
            sentence += 1
    return tokens


def mark_stopwords(tokens: list[Token], lexicon: StopwordLexicon) -> list[Token]:
    return [
        replace(t, kind=TokenKind.STOPWORD)
        if t.kind is TokenKind.WORD and t.surface in lexicon
        else t
        for t in tokens
    ]


def strip_possessive(norm: str, language: str) -> str:
    """Drop the English possessive clitic; other languages pass through."""
    if language.split("-")[0].lower() != "en":
        return norm
    if norm.endswith("'s"):
        return norm[:-2]
    if norm.endswith("'"):
        return norm[:-1]
    return norm


def stem(surface: str, language: str) -> str:
    return stemming.stem(surface, language)


def normalize_document(
    doc: Document,
    lexicon: StopwordLexicon,
    separators: str = DEFAULT_SEPARATORS,
    comma_breaks: bool = False,
) -> NormalizedDocument:
    """tokenize -> mark_stopwords -> stem Word tokens, preserving order."""
    tokens = mark_stopwords(
        tokenize(doc.body, doc.language, separators=separators,
                 comma_breaks=comma_breaks),
        lexicon,
    )
    items: list[ConceptToken | Token] = []
    for t in tokens:
        if t.kind is TokenKind.WORD:
            norm = strip_possessive(fold_apostrophes(t.surface.lower()), doc.language)
            if not norm:
                continue
            items.append(
                ConceptToken(
                    token=t,
                    stem=stemming.stem(norm, doc.language),
                    norm=norm,
                    language=doc.language,
                )
            )
        else:
            items.append(t)
    return NormalizedDocument(document=doc, items=tuple(items))


def sentence_spans(body: str, separators: str = DEFAULT_SEPARATORS,
                   comma_breaks: bool = False) -> list[tuple[int, int]]:
    """Byte ranges of sentences: separator runs close the sentence they end.

    Always returns at least the spans covering the whole body; index i holds
    the extent of sentence_index i.
    """
    spans: list[tuple[int, int]] = []
    start = 0
    body_bytes_len = len(body.encode("utf-8"))
    for t in tokenize(body, separators=separators, comma_breaks=comma_breaks):
        if t.kind is TokenKind.SEPARATOR:
            spans.append((start, t.end))
            start = t.end
    if start < body_bytes_len or not spans:
        spans.append((start, body_bytes_len))
    return spans
