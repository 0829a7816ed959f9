"""Focal statistics over shared-association sets.

unique_degree: how many distinct partners a concept has in the set.
weighted_degree: total usage of all its incident associations.
Tables pair the top-k concepts with the top-k associations.
"""

from __future__ import annotations

import csv
import io
from collections.abc import Mapping
from dataclasses import dataclass

from .intersect import SharedAssociationSet
from .semnet import canonical_pair

Pair = tuple[str, str]


@dataclass(frozen=True)
class ConceptFocality:
    concept: str
    unique_degree: int
    weighted_degree: int


def _as_counts(s: SharedAssociationSet | Mapping[Pair, int]) -> dict[Pair, int]:
    if isinstance(s, SharedAssociationSet):
        return s.counts()
    return {canonical_pair(*pair): count for pair, count in s.items()}


def concept_focality(
    s: SharedAssociationSet | Mapping[Pair, int],
) -> list[ConceptFocality]:
    """Sorted by weighted_degree desc, then concept (lexicographic)."""
    counts = _as_counts(s)
    unique: dict[str, int] = {}
    weighted: dict[str, int] = {}
    for (a, b), count in counts.items():
        for c in (a, b):
            unique[c] = unique.get(c, 0) + 1
            weighted[c] = weighted.get(c, 0) + count
    return [
        ConceptFocality(concept=c, unique_degree=unique[c], weighted_degree=weighted[c])
        for c in sorted(unique, key=lambda c: (-weighted[c], c))
    ]


def top_associations(
    s: SharedAssociationSet | Mapping[Pair, int], k: int
) -> list[tuple[Pair, int]]:
    """k highest-count associations, count desc, lexicographic tie-break."""
    if k < 1:
        raise ValueError("k must be >= 1")
    counts = _as_counts(s)
    ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return ordered[:k]


@dataclass(frozen=True)
class TableReport:
    concepts: list[ConceptFocality]
    associations: list[tuple[Pair, int]]
    labels: dict[str, str]

    def _label(self, concept: str) -> str:
        return self.labels.get(concept, concept)

    def concepts_csv(self) -> str:
        out = io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["concept", "unique_degree", "weighted_degree"])
        for f in self.concepts:
            w.writerow([self._label(f.concept), f.unique_degree, f.weighted_degree])
        return out.getvalue()

    def associations_csv(self) -> str:
        out = io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["a", "b", "total_count"])
        for (a, b), count in self.associations:
            w.writerow([self._label(a), self._label(b), count])
        return out.getvalue()

    def text(self) -> str:
        """Two-column aligned layout: focal concepts | focal associations."""
        left = [
            f"{self._label(f.concept)} {f.weighted_degree}" for f in self.concepts
        ]
        right = [
            f"{self._label(a)} - {self._label(b)} {count}"
            for (a, b), count in self.associations
        ]
        width = max([len(s) for s in left] + [24])
        lines = [f"{'Concepts':<{width}}  Associations"]
        for i in range(max(len(left), len(right))):
            l = left[i] if i < len(left) else ""
            r = right[i] if i < len(right) else ""
            lines.append(f"{l:<{width}}  {r}".rstrip())
        return "\n".join(lines) + "\n"


def render_table(
    s: SharedAssociationSet | Mapping[Pair, int],
    k: int = 10,
    labels: Mapping[str, str] | None = None,
) -> TableReport:
    counts = _as_counts(s)
    focality = concept_focality(counts)[:k]
    assocs = top_associations(counts, k) if counts else []
    return TableReport(
        concepts=focality, associations=assocs, labels=dict(labels or {})
    )
