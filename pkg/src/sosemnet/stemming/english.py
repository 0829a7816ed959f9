"""English stemmer (the porter2 / Snowball "english" algorithm).

Direct transcription of the published algorithm: capital-Y marking for
consonantal y, the gener/commun/arsen region overrides, both exception
lists, and the longest-match-then-commit suffix tables.  Output is pinned
against a reference Snowball implementation by tests/data/stems_en*.tsv.

Input is expected to be lowercase; the stemmer never changes case except
for its internal Y marking, which is undone before returning.
"""

from __future__ import annotations

_VOWELS = frozenset("aeiouy")
_DOUBLES = ("bb", "dd", "ff", "gg", "mm", "nn", "pp", "rr", "tt")
_LI_ENDING = frozenset("cdeghkmnrt")

_EXCEPTION1 = {
    "skis": "ski",
    "skies": "sky",
    "dying": "die",
    "lying": "lie",
    "tying": "tie",
    "idly": "idl",
    "gently": "gentl",
    "ugly": "ugli",
    "early": "earli",
    "only": "onli",
    "singly": "singl",
    "sky": "sky",
    "news": "news",
    "howe": "howe",
    "atlas": "atlas",
    "cosmos": "cosmos",
    "bias": "bias",
    "andes": "andes",
}

_EXCEPTION2 = frozenset(
    ("inning", "outing", "canning", "herring", "earring", "proceed", "exceed", "succeed")
)

# (suffix, replacement) pairs, longest first; None replacement means the
# entry carries a guard handled inline.
_STEP2 = (
    ("ization", "ize"),
    ("ational", "ate"),
    ("fulness", "ful"),
    ("ousness", "ous"),
    ("iveness", "ive"),
    ("tional", "tion"),
    ("biliti", "ble"),
    ("lessli", "less"),
    ("entli", "ent"),
    ("ation", "ate"),
    ("alism", "al"),
    ("aliti", "al"),
    ("ousli", "ous"),
    ("iviti", "ive"),
    ("fulli", "ful"),
    ("enci", "ence"),
    ("anci", "ance"),
    ("abli", "able"),
    ("izer", "ize"),
    ("ator", "ate"),
    ("alli", "al"),
    ("ogi", None),
    ("bli", "ble"),
    ("li", None),
)

_STEP3 = (
    ("ational", "ate"),
    ("tional", "tion"),
    ("alize", "al"),
    ("icate", "ic"),
    ("iciti", "ic"),
    ("ative", None),
    ("ical", "ic"),
    ("ness", ""),
    ("ful", ""),
)

_STEP4 = (
    "ement",
    "ance",
    "ence",
    "able",
    "ible",
    "ment",
    "ant",
    "ent",
    "ism",
    "ate",
    "iti",
    "ous",
    "ive",
    "ize",
    "ion",
    "al",
    "er",
    "ic",
)


def _region_after(word: str, start: int) -> int:
    """Index after the first non-vowel that follows a vowel, from start."""
    n = len(word)
    i = start
    while i < n and word[i] not in _VOWELS:
        i += 1
    if i == n:
        return n
    i += 1
    while i < n and word[i] in _VOWELS:
        i += 1
    if i == n:
        return n
    return i + 1


def _mark_regions(word: str) -> tuple[int, int]:
    r1 = None
    for prefix in ("gener", "commun", "arsen"):
        if word.startswith(prefix):
            r1 = len(prefix)
            break
    if r1 is None:
        r1 = _region_after(word, 0)
    return r1, _region_after(word, r1)


def _ends_short_syllable(word: str) -> bool:
    n = len(word)
    if n >= 3:
        a, b, c = word[n - 3], word[n - 2], word[n - 1]
        if a not in _VOWELS and b in _VOWELS and c not in _VOWELS and c not in "wxY":
            return True
    return n == 2 and word[0] in _VOWELS and word[1] not in _VOWELS


def stem(word: str) -> str:
    if word in _EXCEPTION1:
        return _EXCEPTION1[word]
    if len(word) < 3:
        return word

    y_found = False
    if word.startswith("'"):
        word = word[1:]
    chars = list(word)
    if chars and chars[0] == "y":
        chars[0] = "Y"
        y_found = True
    for i in range(1, len(chars)):
        if chars[i] == "y" and chars[i - 1] in _VOWELS:
            chars[i] = "Y"
            y_found = True
    word = "".join(chars)

    r1, r2 = _mark_regions(word)

    # step 0: strip apostrophe suffixes
    for suf in ("'s'", "'s", "'"):
        if word.endswith(suf):
            word = word[: -len(suf)]
            break

    # step 1a
    if word.endswith("sses"):
        word = word[:-2]
    elif word.endswith(("ied", "ies")):
        word = word[:-3] + ("i" if len(word) > 4 else "ie")
    elif word.endswith(("us", "ss")):
        pass
    elif word.endswith("s"):
        if any(c in _VOWELS for c in word[:-2]):
            word = word[:-1]

    if word in _EXCEPTION2:
        return word

    # step 1b
    matched_eed = False
    for suf in ("eedly", "eed"):
        if word.endswith(suf):
            matched_eed = True
            if len(word) - len(suf) >= r1:
                word = word[: -len(suf)] + "ee"
            break
    if not matched_eed:
        for suf in ("ingly", "edly", "ing", "ed"):
            if word.endswith(suf):
                prefix = word[: -len(suf)]
                if any(c in _VOWELS for c in prefix):
                    word = prefix
                    if word.endswith(("at", "bl", "iz")):
                        word += "e"
                    elif word.endswith(_DOUBLES):
                        word = word[:-1]
                    elif len(word) == r1 and _ends_short_syllable(word):
                        word += "e"
                break

    # step 1c: final y/Y preceded by a non-vowel that is not the first letter
    if len(word) > 2 and word[-1] in "yY" and word[-2] not in _VOWELS:
        word = word[:-1] + "i"

    # step 2
    for suf, rep in _STEP2:
        if word.endswith(suf):
            if len(word) - len(suf) >= r1:
                if suf == "ogi":
                    if word.endswith("logi"):
                        word = word[:-1]
                elif suf == "li":
                    if len(word) > 2 and word[-3] in _LI_ENDING:
                        word = word[:-2]
                else:
                    word = word[: -len(suf)] + rep
            break

    # step 3
    for suf, rep in _STEP3:
        if word.endswith(suf):
            if len(word) - len(suf) >= r1:
                if suf == "ative":
                    if len(word) - len(suf) >= r2:
                        word = word[: -len(suf)]
                else:
                    word = word[: -len(suf)] + rep
            break

    # step 4
    for suf in _STEP4:
        if word.endswith(suf):
            if len(word) - len(suf) >= r2:
                if suf == "ion":
                    if len(word) > 3 and word[-4] in "st":
                        word = word[:-3]
                else:
                    word = word[: -len(suf)]
            break

    # step 5
    if word.endswith("e"):
        if len(word) - 1 >= r2 or (
            len(word) - 1 >= r1 and not _ends_short_syllable(word[:-1])
        ):
            word = word[:-1]
    elif word.endswith("ll") and len(word) - 1 >= r2:
        word = word[:-1]

    if y_found:
        word = word.replace("Y", "y")
    return word
