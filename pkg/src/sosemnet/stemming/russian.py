"""Russian Snowball stemmer.

Direct transcription of the published algorithm.  All suffix matching is
confined to the RV region (everything after the first vowel); each suffix
table is longest-match-then-commit: once the longest in-region suffix is
selected, a failing side condition aborts the whole table rather than
falling back to a shorter suffix.  The letter ё is treated as a consonant
and is not folded to е, matching the reference implementation pinned by
tests/data/stems_ru*.tsv.

Input is expected to be lowercase.
"""

from __future__ import annotations

_VOWELS = frozenset("аеиоуыэюя")


def _sorted_desc(entries: tuple[tuple[str, bool], ...]) -> tuple[tuple[str, bool], ...]:
    return tuple(sorted(entries, key=lambda e: -len(e[0])))


# (suffix, requires preceding а/я) pairs, longest first within each table.
_PERFECTIVE_GERUND = _sorted_desc(
    (
        ("в", True),
        ("вши", True),
        ("вшись", True),
        ("ив", False),
        ("ивши", False),
        ("ившись", False),
        ("ыв", False),
        ("ывши", False),
        ("ывшись", False),
    )
)

_ADJECTIVE = _sorted_desc(
    tuple(
        (s, False)
        for s in (
            "ее", "ие", "ые", "ое", "ими", "ыми", "ей", "ий", "ый", "ой",
            "ем", "им", "ым", "ом", "его", "ого", "ему", "ому", "их", "ых",
            "ую", "юю", "ая", "яя", "ою", "ею",
        )
    )
)

_PARTICIPLE = _sorted_desc(
    (
        ("ем", True),
        ("нн", True),
        ("вш", True),
        ("ющ", True),
        ("щ", True),
        ("ивш", False),
        ("ывш", False),
        ("ующ", False),
    )
)

_REFLEXIVE = _sorted_desc((("ся", False), ("сь", False)))

_VERB = _sorted_desc(
    tuple(
        (s, True)
        for s in (
            "ла", "на", "ете", "йте", "ли", "й", "л", "ем", "н", "ло", "но",
            "ет", "ют", "ны", "ть", "ешь", "нно",
        )
    )
    + tuple(
        (s, False)
        for s in (
            "ила", "ыла", "ена", "ейте", "уйте", "ите", "или", "ыли", "ей",
            "уй", "ил", "ыл", "им", "ым", "ен", "ило", "ыло", "ено", "ят",
            "ует", "уют", "ит", "ыт", "ены", "ить", "ыть", "ишь", "ую", "ю",
        )
    )
)

_NOUN = _sorted_desc(
    tuple(
        (s, False)
        for s in (
            "а", "ев", "ов", "ие", "ье", "е", "иями", "ями", "ами", "еи",
            "ии", "и", "ией", "ей", "ой", "ий", "й", "иям", "ям", "ием",
            "ем", "ам", "ом", "о", "у", "ах", "иях", "ях", "ы", "ь", "ию",
            "ью", "ю", "ия", "ья", "я",
        )
    )
)


def _mark_regions(word: str) -> tuple[int, int]:
    n = len(word)
    i = 0
    while i < n and word[i] not in _VOWELS:
        i += 1
    if i == n:
        return n, n
    rv = i + 1
    i = rv
    while i < n and word[i] in _VOWELS:
        i += 1
    if i == n:
        return rv, n
    i += 1
    while i < n and word[i] not in _VOWELS:
        i += 1
    if i == n:
        return rv, n
    i += 1
    while i < n and word[i] in _VOWELS:
        i += 1
    if i == n:
        return rv, n
    return rv, i + 1


def _among(word: str, rv: int, entries: tuple[tuple[str, bool], ...]) -> str | None:
    """Longest in-region suffix wins; a failed а/я guard aborts the table."""
    for suf, needs_aya in entries:
        if word.endswith(suf) and len(word) - len(suf) >= rv:
            if needs_aya:
                i = len(word) - len(suf) - 1
                if i >= rv and word[i] in "ая":
                    return word[: -len(suf)]
                return None
            return word[: -len(suf)]
    return None


def _adjectival(word: str, rv: int) -> str | None:
    w = _among(word, rv, _ADJECTIVE)
    if w is None:
        return None
    p = _among(w, rv, _PARTICIPLE)
    return p if p is not None else w


def stem(word: str) -> str:
    rv, r2 = _mark_regions(word)
    if rv >= len(word):
        return word

    # step 1: perfective gerund, else (reflexive?) adjectival | verb | noun
    w = _among(word, rv, _PERFECTIVE_GERUND)
    if w is None:
        w = word
        r = _among(w, rv, _REFLEXIVE)
        if r is not None:
            w = r
        a = _adjectival(w, rv)
        if a is not None:
            w = a
        else:
            v = _among(w, rv, _VERB)
            if v is not None:
                w = v
            else:
                n = _among(w, rv, _NOUN)
                if n is not None:
                    w = n
    word = w

    # step 2: lone и
    if word.endswith("и") and len(word) - 1 >= rv:
        word = word[:-1]

    # step 3: derivational ост(ь), only in R2
    for suf in ("ость", "ост"):
        if word.endswith(suf) and len(word) - len(suf) >= rv:
            if len(word) - len(suf) >= r2:
                word = word[: -len(suf)]
            break

    # step 4: undouble нн, else superlative (then undouble нн), else final ь
    for suf in ("ейше", "ейш", "нн", "ь"):
        if word.endswith(suf) and len(word) - len(suf) >= rv:
            if suf in ("ейше", "ейш"):
                word = word[: -len(suf)]
                if word.endswith("нн") and len(word) - 2 >= rv:
                    word = word[:-1]
            else:
                word = word[:-1]
            break

    return word
