"""Exception taxonomy shared across the toolkit.

Every error carries the offending identifier (path, member id, concept, ...)
as its first argument so callers can report precisely what went wrong.
"""

from __future__ import annotations


class SosemnetError(Exception):
    """Base class for all toolkit errors."""


class MissingFile(SosemnetError):
    """A manifest, document, lexicon, or survey path does not exist."""


class MalformedManifest(SosemnetError):
    """The corpus manifest is not valid JSON or violates its schema."""


class InvalidEncoding(SosemnetError):
    """A text file is not valid UTF-8."""


class UnknownMember(SosemnetError):
    """A member id was referenced but never declared in the roster."""


class DuplicateDocId(SosemnetError):
    """Two documents in one manifest share an id."""


class EmptyDocument(SosemnetError):
    """A document body contains no characters."""


class MalformedLexicon(SosemnetError):
    """A stopword lexicon entry spans multiple words or is empty."""


class MalformedSurvey(SosemnetError):
    """A survey row is structurally invalid (columns, duplicates, header)."""


class FrequencyOutOfRange(SosemnetError):
    """A survey answer is outside the closed 0..4 scale."""


class SelfRating(SosemnetError):
    """A survey row rates the rater themself."""


class UnsupportedLanguage(SosemnetError):
    """No stemmer is registered for the requested language tag."""


class EmptyGraph(SosemnetError):
    """Community detection was asked to partition a graph with no ties."""


class GroupTooSmall(SosemnetError):
    """A sharing rule demands more sharers than the group has members."""


class UnknownConcept(SosemnetError):
    """A concordance query names a concept absent from the scoped corpus."""


class EmptySet(SosemnetError):
    """An export was requested for a shared-association set with no edges."""
