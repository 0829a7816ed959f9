"""Language-dispatched stemming."""

from __future__ import annotations

from ..errors import UnsupportedLanguage
from . import english, russian

_STEMMERS = {
    "en": english.stem,
    "ru": russian.stem,
}


def supported_languages() -> tuple[str, ...]:
    return tuple(sorted(_STEMMERS))


def stem(surface: str, language: str) -> str:
    """Stem a lowercase word form for the given language tag.

    Tags are matched on the primary subtag, case-insensitively, so
    "ru-RU" selects the Russian stemmer.  Unknown tags raise
    UnsupportedLanguage.
    """
    key = language.split("-")[0].lower()
    try:
        stemmer = _STEMMERS[key]
    except KeyError:
        raise UnsupportedLanguage(language) from None
    return stemmer(surface)
