"""Shared-association sets under configurable sharing rules.

A rule names a member group, how many of them must use an association for
it to count as shared (min_members), and a stability floor on the summed
usage (min_total_count).  Layered maps split a two-group comparison into
a common layer (meets both rules) and group-specific layers (meets one
group's rule at the specific threshold while fewer than two members of
the other group use it).
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, replace
from typing import Iterable

from .errors import EmptySet, GroupTooSmall, UnknownMember
from .semnet import SemanticNetwork, canonical_pair

Pair = tuple[str, str]


@dataclass(frozen=True)
class SharingRule:
    group: frozenset[str]
    min_members: int = 2
    min_total_count: int = 1

    def __post_init__(self):
        if self.min_members < 2:
            raise ValueError("min_members must be >= 2")
        if self.min_total_count < 1:
            raise ValueError("min_total_count must be >= 1")
        if self.min_members > len(self.group):
            raise GroupTooSmall(
                f"group of {len(self.group)} cannot satisfy "
                f"min_members={self.min_members}"
            )

    def signature(self) -> str:
        return (
            f"group={'+'.join(sorted(self.group))}"
            f";min_members={self.min_members};min_total={self.min_total_count}"
        )


@dataclass(frozen=True)
class SharedEdge:
    sharers: frozenset[str]
    total_count: int


@dataclass(frozen=True)
class SharedAssociationSet:
    provenance: str
    edges: dict[Pair, SharedEdge]

    def counts(self) -> dict[Pair, int]:
        return {pair: e.total_count for pair, e in self.edges.items()}

    def concepts(self) -> set[str]:
        return {c for pair in self.edges for c in pair}

    def total(self) -> int:
        return sum(e.total_count for e in self.edges.values())

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class LayeredMap:
    common: SharedAssociationSet
    specific_a: SharedAssociationSet
    specific_b: SharedAssociationSet
    rule_a: SharingRule
    rule_b: SharingRule

    def layer(self, name: str) -> SharedAssociationSet:
        key = name.replace("-", "_").lower()
        try:
            return {"common": self.common, "specific_a": self.specific_a,
                    "specific_b": self.specific_b}[key]
        except KeyError:
            raise KeyError(f"unknown layer {name!r}") from None


def shared_with_anyone(
    nets: Mapping[str, SemanticNetwork], member: str
) -> set[Pair]:
    """The member's associations present in at least one other network."""
    if member not in nets:
        raise UnknownMember(member)
    own = set(nets[member].associations)
    shared: set[Pair] = set()
    for other, net in nets.items():
        if other == member:
            continue
        shared |= own & set(net.associations)
    return shared


def _sharers(nets: Mapping[str, SemanticNetwork], group: Iterable[str], pair: Pair):
    return frozenset(m for m in group if pair in nets[m].associations)


def group_shared(
    nets: Mapping[str, SemanticNetwork], rule: SharingRule
) -> SharedAssociationSet:
    """Associations used by >= min_members of the group whose summed usage
    (over the sharers only) reaches min_total_count."""
    if len(rule.group) < rule.min_members:
        raise GroupTooSmall(
            f"group of {len(rule.group)} cannot satisfy min_members={rule.min_members}"
        )
    for m in sorted(rule.group):
        if m not in nets:
            raise UnknownMember(m)
    candidates: set[Pair] = set()
    for m in rule.group:
        candidates.update(nets[m].associations)
    edges: dict[Pair, SharedEdge] = {}
    for pair in sorted(candidates):
        sharers = _sharers(nets, rule.group, pair)
        if len(sharers) < rule.min_members:
            continue
        total = sum(nets[m].associations[pair] for m in sharers)
        if total < rule.min_total_count:
            continue
        edges[pair] = SharedEdge(sharers=sharers, total_count=total)
    return SharedAssociationSet(provenance=rule.signature(), edges=edges)


def layered_map(
    nets: Mapping[str, SemanticNetwork],
    rule_a: SharingRule,
    rule_b: SharingRule,
    specific_min_a: int | None = None,
    specific_min_b: int | None = None,
) -> LayeredMap:
    """Common layer: meets both group rules; sharers and totals pool both
    groups' sharers.  Specific layers: meets the group's rule at the
    specific threshold (default: the rule's own min_members) while fewer
    than two members of the other group use the association."""
    shared_a = group_shared(nets, rule_a)
    shared_b = group_shared(nets, rule_b)

    common_edges: dict[Pair, SharedEdge] = {}
    for pair in sorted(set(shared_a.edges) & set(shared_b.edges)):
        sharers = shared_a.edges[pair].sharers | shared_b.edges[pair].sharers
        total = sum(nets[m].associations[pair] for m in sharers)
        common_edges[pair] = SharedEdge(sharers=sharers, total_count=total)
    common = SharedAssociationSet(
        provenance=f"common[{rule_a.signature()} & {rule_b.signature()}]",
        edges=common_edges,
    )

    def specific(own_rule, own_specific_min, other_group, label):
        wanted_min = (
            own_specific_min if own_specific_min is not None
            else own_rule.min_members
        )
        if wanted_min > len(own_rule.group):
            # threshold beyond the group size: no edge can qualify
            provenance = (
                f"{label}[group={'+'.join(sorted(own_rule.group))}"
                f";min_members={wanted_min}"
                f";min_total={own_rule.min_total_count}"
                f" vs {'+'.join(sorted(other_group))}]"
            )
            return SharedAssociationSet(provenance=provenance, edges={})
        rule = replace(own_rule, min_members=wanted_min)
        provenance = (
            f"{label}[{rule.signature()} vs {'+'.join(sorted(other_group))}]"
        )
        shared_own = group_shared(nets, rule)
        edges = {
            pair: edge
            for pair, edge in shared_own.edges.items()
            if len(_sharers(nets, other_group, pair)) < 2
        }
        return SharedAssociationSet(provenance=provenance, edges=edges)

    specific_a = specific(rule_a, specific_min_a, rule_b.group, "specific_a")
    specific_b = specific(rule_b, specific_min_b, rule_a.group, "specific_b")

    overlap = (
        (set(common.edges) & set(specific_a.edges))
        | (set(common.edges) & set(specific_b.edges))
        | (set(specific_a.edges) & set(specific_b.edges))
    )
    if overlap:
        raise AssertionError(f"layer disjointness violated: {sorted(overlap)[:3]}")
    return LayeredMap(
        common=common,
        specific_a=specific_a,
        specific_b=specific_b,
        rule_a=rule_a,
        rule_b=rule_b,
    )


def giant_component(s: SharedAssociationSet) -> SharedAssociationSet:
    """Subgraph of the largest connected component; ties broken by most
    total_count, then lexicographically smallest concept."""
    if not s.edges:
        raise EmptySet(s.provenance)
    adj: dict[str, set[str]] = {}
    for a, b in s.edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    seen: set[str] = set()
    components: list[set[str]] = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        seen.add(start)
        while stack:
            n = stack.pop()
            for p in adj[n]:
                if p not in seen:
                    seen.add(p)
                    comp.add(p)
                    stack.append(p)
        components.append(comp)

    def component_total(comp: set[str]) -> int:
        return sum(
            e.total_count for pair, e in s.edges.items() if pair[0] in comp
        )

    best = min(
        components, key=lambda c: (-len(c), -component_total(c), min(c))
    )
    edges = {pair: e for pair, e in s.edges.items() if pair[0] in best}
    return SharedAssociationSet(provenance=f"giant[{s.provenance}]", edges=edges)


def make_set(counts: Mapping[Pair, int], provenance: str = "adhoc",
             sharers: Mapping[Pair, Iterable[str]] | None = None) -> SharedAssociationSet:
    """Build a set directly from pair counts (fixtures, imports)."""
    edges = {}
    for pair, count in counts.items():
        pair = canonical_pair(*pair)
        who = frozenset(sharers.get(pair, ())) if sharers else frozenset()
        edges[pair] = SharedEdge(sharers=who, total_count=count)
    return SharedAssociationSet(provenance=provenance, edges=edges)
