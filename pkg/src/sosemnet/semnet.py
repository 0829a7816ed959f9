"""Per-member semantic networks from strict immediate-adjacency collocation.

Two concept tokens are associated iff they are consecutive in a normalized
stream with nothing between them: any intervening concept, stop word, or
separator breaks adjacency, and documents never collocate across their
boundary.  Equal stems never form a self-loop.

Concept identity is the stem.  Networks also tally the surface forms
behind each stem so display labels (the most frequent surface, singular-
stripped for English) can be derived without touching identity.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field

from .corpus import Genre
from .normalize import ConceptToken, NormalizedDocument


def canonical_pair(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


def iter_adjacent(
    items: Iterable[ConceptToken | object],
) -> Iterator[tuple[ConceptToken, ConceptToken]]:
    """Yield each adjacency event: consecutive concepts, nothing between.

    Shared by network building and concordance extraction so their counts
    cannot drift apart.
    """
    prev: ConceptToken | None = None
    for item in items:
        if isinstance(item, ConceptToken):
            if prev is not None:
                yield prev, item
            prev = item
        else:
            prev = None


@dataclass(frozen=True)
class SemanticNetwork:
    member_id: str
    associations: dict[tuple[str, str], int]
    concept_counts: dict[str, int]
    surfaces: dict[str, Counter] = field(default_factory=dict, repr=False)

    @property
    def occurrences(self) -> int:
        """Total concept-token occurrences (corpus size in tokens)."""
        return sum(self.concept_counts.values())

    def __contains__(self, pair: tuple[str, str]) -> bool:
        return canonical_pair(*pair) in self.associations


def build_member_network(
    streams: Iterable[NormalizedDocument], member_id: str
) -> SemanticNetwork:
    associations: dict[tuple[str, str], int] = {}
    concept_counts: dict[str, int] = {}
    surfaces: dict[str, Counter] = {}
    for stream in streams:
        for item in stream.items:
            if isinstance(item, ConceptToken):
                concept_counts[item.stem] = concept_counts.get(item.stem, 0) + 1
                surfaces.setdefault(item.stem, Counter())[(item.norm, item.language)] += 1
        for prev, cur in iter_adjacent(stream.items):
            if prev.stem == cur.stem:
                continue
            pair = canonical_pair(prev.stem, cur.stem)
            associations[pair] = associations.get(pair, 0) + 1
    return SemanticNetwork(
        member_id=member_id,
        associations=associations,
        concept_counts=concept_counts,
        surfaces=surfaces,
    )


def network_stats(net: SemanticNetwork) -> tuple[int, int]:
    """(distinct concepts, distinct associations)."""
    return len(net.concept_counts), len(net.associations)


def genre_occurrences(streams: Iterable[NormalizedDocument]) -> dict[Genre, int]:
    """Concept-token occurrences per genre (the corpus-size convention)."""
    counts: dict[Genre, int] = {g: 0 for g in Genre}
    for stream in streams:
        counts[stream.document.genre] += len(stream.concept_tokens())
    return counts


def singular_label(surface: str, language: str) -> str:
    """Display-level plural stripping for English surfaces.

    A light heuristic for table/figure labels only; concept identity stays
    the stem.  Non-English surfaces pass through untouched.
    """
    if language.split("-")[0].lower() != "en":
        return surface
    if len(surface) >= 5 and surface.endswith("sses"):
        return surface[:-2]
    if surface.endswith(("ss", "us", "is")):
        return surface
    if len(surface) >= 5 and surface.endswith("ies"):
        return surface[:-3] + "y"
    if len(surface) >= 4 and surface.endswith("s"):
        return surface[:-1]
    return surface


def concept_labels(
    nets: Iterable[SemanticNetwork],
    concepts: Iterable[str] | None = None,
    glosses: Mapping[str, str] | None = None,
) -> dict[str, str]:
    """Display label per stem: manifest gloss if given, else the most
    frequent surface form (ties: shorter, then lexicographic), singular-
    stripped for English."""
    merged: dict[str, Counter] = {}
    for net in nets:
        for stem_, counter in net.surfaces.items():
            merged.setdefault(stem_, Counter()).update(counter)
    wanted = set(concepts) if concepts is not None else set(merged)
    labels: dict[str, str] = {}
    for stem_ in wanted:
        if glosses and stem_ in glosses:
            labels[stem_] = glosses[stem_]
            continue
        counter = merged.get(stem_)
        if not counter:
            labels[stem_] = stem_
            continue
        (surface, language), _ = min(
            counter.items(), key=lambda kv: (-kv[1], len(kv[0][0]), kv[0][0], kv[0][1])
        )
        labels[stem_] = singular_label(surface, language)
    return labels
