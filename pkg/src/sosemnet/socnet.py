"""Interaction network from survey responses + community detection.

Dyad weights are reconciled by the median of the available reports; the
exact (possibly fractional) median is kept alongside the half-up-rounded
ordinal weight.  Communities come from Girvan-Newman edge-betweenness
removal, computed in exact rational arithmetic so tie-breaks and the
modularity argmax are fully deterministic.
"""

from __future__ import annotations

import heapq
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .corpus import SurveyResponse
from .errors import EmptyGraph

Edge = tuple[str, str]


def canonical_edge(u: str, v: str) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class InteractionTie:
    u: str
    v: str
    weight: int  # ordinal 0..4, median rounded half-up
    median: Fraction  # exact median of the reports

    @property
    def edge(self) -> Edge:
        return (self.u, self.v)


@dataclass(frozen=True)
class CommunityPartition:
    assignment: dict[str, int]
    modularity_trace: list[tuple[int, float]]


def exact_median(values: Sequence[int]) -> Fraction:
    ordered = sorted(values)
    n = len(ordered)
    mid = n // 2
    if n % 2:
        return Fraction(ordered[mid])
    return Fraction(ordered[mid - 1] + ordered[mid], 2)


def round_half_up(x: Fraction) -> int:
    return int(x + Fraction(1, 2)) if x >= 0 else -int(-x + Fraction(1, 2))


def reconcile_ties(responses: Iterable[SurveyResponse]) -> list[InteractionTie]:
    """One tie per dyad with >= 1 report; weight = median, half-up."""
    reports: dict[Edge, list[int]] = {}
    for r in responses:
        reports.setdefault(canonical_edge(r.rater, r.ratee), []).append(r.frequency)
    ties = []
    for (u, v) in sorted(reports):
        med = exact_median(reports[(u, v)])
        ties.append(InteractionTie(u=u, v=v, weight=round_half_up(med), median=med))
    return ties


def _adjacency(edges: Iterable[Edge]) -> dict[str, list[str]]:
    adj: dict[str, set[str]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return {node: sorted(peers) for node, peers in sorted(adj.items())}


def _components(nodes: Sequence[str], adj: dict[str, list[str]]) -> list[list[str]]:
    seen: set[str] = set()
    comps = []
    for start in nodes:
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            n = stack.pop()
            comp.append(n)
            for p in adj.get(n, ()):
                if p not in seen:
                    seen.add(p)
                    stack.append(p)
        comps.append(sorted(comp))
    return comps


def edge_betweenness(
    edges: Iterable[Edge],
    distances: dict[Edge, Fraction] | None = None,
) -> dict[Edge, Fraction]:
    """Brandes accumulation over all sources, exact rationals.

    Each unordered pair of endpoints contributes its pair dependency once
    (the two-directional sums are halved at the end).
    """
    edge_list = sorted(canonical_edge(*e) for e in edges)
    adj = _adjacency(edge_list)
    nodes = sorted(adj)
    bet: dict[Edge, Fraction] = {e: Fraction(0) for e in edge_list}
    for source in nodes:
        if distances is None:
            order, preds, sigma = _bfs(source, adj)
        else:
            order, preds, sigma = _dijkstra(source, adj, distances)
        delta: dict[str, Fraction] = {n: Fraction(0) for n in order}
        for w in reversed(order):
            for v in preds.get(w, ()):
                share = Fraction(sigma[v], sigma[w]) * (1 + delta[w])
                bet[canonical_edge(v, w)] += share
                delta[v] += share
    return {e: b / 2 for e, b in bet.items()}


def _bfs(source, adj):
    dist = {source: 0}
    sigma = {source: 1}
    preds: dict[str, list[str]] = {}
    order = [source]
    queue = [source]
    while queue:
        v = queue.pop(0)
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                sigma[w] = 0
                queue.append(w)
                order.append(w)
            if dist[w] == dist[v] + 1:
                sigma[w] = sigma[w] + sigma[v]
                preds.setdefault(w, []).append(v)
    return order, preds, sigma


def _dijkstra(source, adj, distances):
    dist: dict[str, Fraction] = {source: Fraction(0)}
    sigma = {source: 1}
    preds: dict[str, list[str]] = {}
    done: set[str] = set()
    order = []
    heap: list[tuple[Fraction, str]] = [(Fraction(0), source)]
    while heap:
        d, v = heapq.heappop(heap)
        if v in done:
            continue
        done.add(v)
        order.append(v)
        for w in adj[v]:
            nd = d + distances[canonical_edge(v, w)]
            if w not in dist or nd < dist[w]:
                dist[w] = nd
                sigma[w] = sigma[v]
                preds[w] = [v]
                heapq.heappush(heap, (nd, w))
            elif nd == dist[w] and w not in done:
                sigma[w] += sigma[v]
                preds[w].append(v)
    return order, preds, sigma


def modularity(
    assignment: dict[str, int], original_edges: Sequence[Edge]
) -> Fraction:
    """Newman-Girvan modularity of a partition on the original graph."""
    m = len(original_edges)
    if m == 0:
        return Fraction(0)
    internal: dict[int, int] = {}
    degree_sum: dict[int, int] = {}
    for u, v in original_edges:
        cu, cv = assignment[u], assignment[v]
        degree_sum[cu] = degree_sum.get(cu, 0) + 1
        degree_sum[cv] = degree_sum.get(cv, 0) + 1
        if cu == cv:
            internal[cu] = internal.get(cu, 0) + 1
    q = Fraction(0)
    for c in degree_sum:
        q += Fraction(internal.get(c, 0), m) - (Fraction(degree_sum[c], 2 * m)) ** 2
    return q


def _assignment_of(comps: list[list[str]]) -> dict[str, int]:
    # communities indexed by smallest member id for dense, stable numbering
    assignment: dict[str, int] = {}
    for idx, comp in enumerate(sorted(comps, key=lambda c: c[0])):
        for node in comp:
            assignment[node] = idx
    return assignment


def girvan_newman(
    ties: Iterable[InteractionTie],
    target: int | None = None,
    weighted_distances: bool = False,
    include_zero: bool = False,
) -> CommunityPartition:
    """Remove highest-betweenness edges until the target component count,
    or return the modularity-argmax partition when no target is given.

    Ties with weight 0 ("almost never") are excluded unless include_zero.
    Betweenness ties break on canonical edge order.  Distances, when
    enabled, are 5 - weight.
    """
    tie_list = [t for t in ties if include_zero or t.weight > 0]
    original = sorted(canonical_edge(t.u, t.v) for t in tie_list)
    if not original:
        raise EmptyGraph("no ties with positive weight")
    distances = (
        {canonical_edge(t.u, t.v): Fraction(5 - t.weight) for t in tie_list}
        if weighted_distances
        else None
    )
    nodes = sorted({n for e in original for n in e})

    current = list(original)
    comps = _components(nodes, _adjacency(current))
    trace: list[tuple[int, float]] = []
    snapshots: list[tuple[dict[str, int], Fraction]] = []

    def record() -> None:
        assignment = _assignment_of(comps)
        q = modularity(assignment, original)
        trace.append((len(comps), float(q)))
        snapshots.append((assignment, q))

    record()
    while current and (target is None or len(comps) < target):
        bet = edge_betweenness(current, distances)
        best = max(bet.values())
        victim = min(e for e, b in bet.items() if b == best)
        current.remove(victim)
        new_comps = _components(nodes, _adjacency(current))
        if len(new_comps) > len(comps):
            comps = new_comps
            record()

    if target is not None:
        assignment, _ = snapshots[-1]
    else:
        best_q = max(q for _, q in snapshots)
        assignment = next(a for a, q in snapshots if q == best_q)
    return CommunityPartition(assignment=assignment, modularity_trace=trace)
