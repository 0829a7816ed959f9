"""Corpus loading: manifest, roster, documents, lexicons, survey.

The manifest is a single JSON file:

    {
      "members":   [{"id": "CA", "role": "Artist", "collective": "C"}, ...],
      "documents": [{"id": "ca-1", "member": "CA", "genre": "Interview",
                     "language": "ru", "path": "texts/ca-1.txt"}, ...],
      "stopwords": {"ru": "stopwords_ru.txt"},
      "survey":    "survey.csv"
    }

Paths are resolved relative to the manifest's directory.  All text files
must be valid UTF-8; decoding problems are hard errors because downstream
concordance spans index into the original bytes.
"""

from __future__ import annotations

import csv
import hashlib
import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .errors import (
    DuplicateDocId,
    EmptyDocument,
    FrequencyOutOfRange,
    InvalidEncoding,
    MalformedLexicon,
    MalformedManifest,
    MalformedSurvey,
    MissingFile,
    SelfRating,
    UnknownMember,
)


class Genre(Enum):
    CONVERSATION = "Conversation"
    INTERVIEW = "Interview"
    WRITTEN_TEXT = "WrittenText"


class Role(Enum):
    ARTIST = "Artist"
    ACADEMIC = "Academic"
    UNSPECIFIED = "Unspecified"


_GENRE_ALIASES = {
    "conversation": Genre.CONVERSATION,
    "interview": Genre.INTERVIEW,
    "writtentext": Genre.WRITTEN_TEXT,
    "written_text": Genre.WRITTEN_TEXT,
    "written text": Genre.WRITTEN_TEXT,
}

_ROLE_ALIASES = {
    "artist": Role.ARTIST,
    "academic": Role.ACADEMIC,
    "unspecified": Role.UNSPECIFIED,
}


@dataclass(frozen=True)
class Member:
    id: str
    collective: str
    role: Role = Role.UNSPECIFIED
    display_name: str | None = None


@dataclass(frozen=True)
class Document:
    doc_id: str
    member_id: str
    genre: Genre
    language: str
    path: str
    body: str


@dataclass(frozen=True)
class SurveyResponse:
    rater: str
    ratee: str
    frequency: int


@dataclass(frozen=True)
class StopwordLexicon:
    language: str
    entries: frozenset[str]

    def __contains__(self, surface: str) -> bool:
        return fold_apostrophes(surface.lower()) in self.entries


EMPTY_LEXICON = StopwordLexicon(language="", entries=frozenset())


def fold_apostrophes(s: str) -> str:
    """Typographic apostrophes compare equal to ASCII ones."""
    return s.replace("’", "'")


@dataclass(frozen=True)
class Corpus:
    members: dict[str, Member]
    documents: tuple[Document, ...]
    lexicons: dict[str, StopwordLexicon]
    survey: tuple[SurveyResponse, ...]
    digest: str
    manifest_path: str = ""
    glosses: dict[str, str] = field(default_factory=dict)

    def documents_of(self, member_id: str) -> tuple[Document, ...]:
        if member_id not in self.members:
            raise UnknownMember(member_id)
        return tuple(d for d in self.documents if d.member_id == member_id)

    def collectives(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for m in self.members.values():
            seen.setdefault(m.collective)
        return tuple(seen)

    def collective_members(self, collective: str) -> tuple[str, ...]:
        return tuple(m.id for m in self.members.values() if m.collective == collective)

    def lexicon_for(self, language: str) -> StopwordLexicon:
        key = language.split("-")[0].lower()
        return self.lexicons.get(key, EMPTY_LEXICON)


def _read_text(path: Path) -> str:
    if not path.is_file():
        raise MissingFile(str(path))
    try:
        return path.read_text(encoding="utf-8", errors="strict")
    except UnicodeDecodeError as exc:
        raise InvalidEncoding(f"{path}: {exc}") from None


def load_lexicon(path: Path, language: str) -> StopwordLexicon:
    """One surface form per line; blank lines and # comments ignored."""
    entries = set()
    for lineno, raw in enumerate(_read_text(path).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if any(c.isspace() for c in line):
            raise MalformedLexicon(f"{path}:{lineno}: entry spans whitespace: {line!r}")
        entries.add(fold_apostrophes(line.lower()))
    return StopwordLexicon(language=language, entries=frozenset(entries))


def load_survey(path: Path | str, roster: set[str]) -> tuple[SurveyResponse, ...]:
    """Survey CSV with header rater,ratee,frequency; frequency in 0..4."""
    path = Path(path)
    text = _read_text(path)
    reader = csv.reader(text.splitlines())
    try:
        header = next(reader)
    except StopIteration:
        raise MalformedSurvey(f"{path}: empty file") from None
    if [h.strip().lower() for h in header] != ["rater", "ratee", "frequency"]:
        raise MalformedSurvey(f"{path}: expected header rater,ratee,frequency")
    responses = []
    seen: set[tuple[str, str]] = set()
    for lineno, row in enumerate(reader, start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != 3:
            raise MalformedSurvey(f"{path}:{lineno}: expected 3 columns")
        rater, ratee, freq_s = (c.strip() for c in row)
        for mid in (rater, ratee):
            if mid not in roster:
                raise UnknownMember(mid)
        if rater == ratee:
            raise SelfRating(rater)
        try:
            freq = int(freq_s)
        except ValueError:
            raise MalformedSurvey(f"{path}:{lineno}: non-integer frequency {freq_s!r}") from None
        if not 0 <= freq <= 4:
            raise FrequencyOutOfRange(f"{path}:{lineno}: {freq}")
        if (rater, ratee) in seen:
            raise MalformedSurvey(f"{path}:{lineno}: duplicate report {rater}->{ratee}")
        seen.add((rater, ratee))
        responses.append(SurveyResponse(rater=rater, ratee=ratee, frequency=freq))
    return tuple(responses)


def _require(obj: dict, key: str, kind: type, where: str):
    if key not in obj:
        raise MalformedManifest(f"{where}: missing key {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        raise MalformedManifest(f"{where}: key {key!r} must be {kind.__name__}")
    return value


def load_corpus(manifest_path: Path | str) -> Corpus:
    manifest_path = Path(manifest_path)
    raw = _read_text(manifest_path)
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise MalformedManifest(f"{manifest_path}: {exc}") from None
    if not isinstance(data, dict):
        raise MalformedManifest(f"{manifest_path}: top level must be an object")
    base = manifest_path.parent
    where = str(manifest_path)

    digest = hashlib.sha256()

    def feed(tag: str, payload: bytes) -> None:
        digest.update(tag.encode())
        digest.update(len(payload).to_bytes(8, "big"))
        digest.update(payload)

    feed("manifest", raw.encode())

    members: dict[str, Member] = {}
    for entry in _require(data, "members", list, where):
        if not isinstance(entry, dict):
            raise MalformedManifest(f"{where}: member entries must be objects")
        mid = _require(entry, "id", str, where)
        if not mid:
            raise MalformedManifest(f"{where}: empty member id")
        if mid in members:
            raise MalformedManifest(f"{where}: duplicate member id {mid!r}")
        collective = entry.get("collective") or mid[0]
        role_raw = str(entry.get("role", "Unspecified")).lower()
        if role_raw not in _ROLE_ALIASES:
            raise MalformedManifest(f"{where}: unknown role {entry.get('role')!r}")
        members[mid] = Member(
            id=mid,
            collective=collective,
            role=_ROLE_ALIASES[role_raw],
            display_name=entry.get("display_name"),
        )

    documents: list[Document] = []
    doc_ids: set[str] = set()
    for entry in _require(data, "documents", list, where):
        if not isinstance(entry, dict):
            raise MalformedManifest(f"{where}: document entries must be objects")
        rel_path = _require(entry, "path", str, where)
        doc_id = entry.get("id") or entry.get("doc_id") or Path(rel_path).stem
        if not isinstance(doc_id, str) or not doc_id:
            raise MalformedManifest(f"{where}: document id must be a string")
        if doc_id in doc_ids:
            raise DuplicateDocId(doc_id)
        doc_ids.add(doc_id)
        member_id = _require(entry, "member", str, where)
        if member_id not in members:
            raise UnknownMember(member_id)
        genre_raw = _require(entry, "genre", str, where).lower()
        if genre_raw not in _GENRE_ALIASES:
            raise MalformedManifest(f"{where}: unknown genre {entry.get('genre')!r}")
        language = _require(entry, "language", str, where)
        doc_path = base / rel_path
        body = _read_text(doc_path)
        if not body and not entry.get("allow_empty", False):
            raise EmptyDocument(str(doc_path))
        feed(f"doc:{doc_id}", body.encode())
        documents.append(
            Document(
                doc_id=doc_id,
                member_id=member_id,
                genre=_GENRE_ALIASES[genre_raw],
                language=language,
                path=str(doc_path),
                body=body,
            )
        )

    lexicons: dict[str, StopwordLexicon] = {}
    stopwords = data.get("stopwords", {})
    if not isinstance(stopwords, dict):
        raise MalformedManifest(f"{where}: stopwords must map language to path")
    for lang, rel in sorted(stopwords.items()):
        lex_path = base / rel
        feed(f"lexicon:{lang}", _read_text(lex_path).encode())
        lexicons[lang.split("-")[0].lower()] = load_lexicon(lex_path, lang)

    survey: tuple[SurveyResponse, ...] = ()
    if data.get("survey"):
        survey_path = base / _require(data, "survey", str, where)
        feed("survey", _read_text(survey_path).encode())
        survey = load_survey(survey_path, set(members))

    glosses = data.get("glosses", {})
    if not isinstance(glosses, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in glosses.items()
    ):
        raise MalformedManifest(f"{where}: glosses must map stem to display string")

    return Corpus(
        members=members,
        documents=tuple(documents),
        lexicons=lexicons,
        survey=survey,
        digest=digest.hexdigest(),
        manifest_path=str(manifest_path.resolve()),
        glosses=dict(glosses),
    )
