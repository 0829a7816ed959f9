"""GraphML and CSV exchange for shared-association sets.

Nodes carry display label, unique and weighted degree; edges carry
total_count, the sorted sharer list, and a layer tag.  Exports are
deterministic (sorted nodes/edges) and round-trip: importing an exported
document reproduces the edge structure and therefore identical focality
statistics.
"""

from __future__ import annotations

import csv
import io
import xml.etree.ElementTree as ET
from collections.abc import Mapping

from .errors import EmptySet
from .focal import concept_focality
from .intersect import SharedAssociationSet, SharedEdge
from .semnet import canonical_pair

GRAPHML_NS = "http://graphml.graphdrawing.org/xmlns"

_NODE_KEYS = (
    ("label", "string"),
    ("unique_degree", "int"),
    ("weighted_degree", "int"),
)
_EDGE_KEYS = (
    ("total_count", "int"),
    ("sharers", "string"),
    ("layer", "string"),
)


def _combined(layers: Mapping[str, SharedAssociationSet]):
    """(pair, layer, edge) triples plus pooled counts for node statistics."""
    triples = []
    counts: dict[tuple[str, str], int] = {}
    for layer in sorted(layers):
        for pair in sorted(layers[layer].edges):
            edge = layers[layer].edges[pair]
            triples.append((pair, layer, edge))
            counts[pair] = counts.get(pair, 0) + edge.total_count
    return triples, counts


def export_graphml(
    layers: Mapping[str, SharedAssociationSet] | SharedAssociationSet,
    labels: Mapping[str, str] | None = None,
    default_layer: str = "common",
) -> str:
    if isinstance(layers, SharedAssociationSet):
        layers = {default_layer: layers}
    if not any(s.edges for s in layers.values()):
        raise EmptySet("nothing to export")
    labels = dict(labels or {})
    triples, counts = _combined(layers)
    focality = {f.concept: f for f in concept_focality(counts)}

    ET.register_namespace("", GRAPHML_NS)
    root = ET.Element(f"{{{GRAPHML_NS}}}graphml")
    key_ids: dict[tuple[str, str], str] = {}
    for i, (domain, keys) in enumerate((("node", _NODE_KEYS), ("edge", _EDGE_KEYS))):
        for j, (name, kind) in enumerate(keys):
            kid = f"d{i}{j}"
            key_ids[(domain, name)] = kid
            ET.SubElement(
                root,
                f"{{{GRAPHML_NS}}}key",
                id=kid,
                attrib={"for": domain, "attr.name": name, "attr.type": kind},
            )
    graph = ET.SubElement(
        root, f"{{{GRAPHML_NS}}}graph", id="G", edgedefault="undirected"
    )

    def data(parent, domain, name, value):
        el = ET.SubElement(parent, f"{{{GRAPHML_NS}}}data", key=key_ids[(domain, name)])
        el.text = str(value)

    for concept in sorted({c for pair in counts for c in pair}):
        node = ET.SubElement(graph, f"{{{GRAPHML_NS}}}node", id=concept)
        f = focality[concept]
        data(node, "node", "label", labels.get(concept, concept))
        data(node, "node", "unique_degree", f.unique_degree)
        data(node, "node", "weighted_degree", f.weighted_degree)

    for idx, ((a, b), layer, edge) in enumerate(triples):
        el = ET.SubElement(
            graph, f"{{{GRAPHML_NS}}}edge", id=f"e{idx}", source=a, target=b
        )
        data(el, "edge", "total_count", edge.total_count)
        data(el, "edge", "sharers", "|".join(sorted(edge.sharers)))
        data(el, "edge", "layer", layer)

    return ET.tostring(root, encoding="unicode", xml_declaration=True)


def import_graphml(text: str) -> dict[str, SharedAssociationSet]:
    root = ET.fromstring(text)
    ns = {"g": GRAPHML_NS}
    key_names = {
        k.get("id"): k.get("attr.name") for k in root.findall("g:key", ns)
    }
    layers: dict[str, dict] = {}
    graph = root.find("g:graph", ns)
    if graph is None:
        raise ValueError("no <graph> element")
    for el in graph.findall("g:edge", ns):
        pair = canonical_pair(el.get("source"), el.get("target"))
        attrs = {
            key_names.get(d.get("key")): (d.text or "")
            for d in el.findall("g:data", ns)
        }
        layer = attrs.get("layer", "common")
        sharers = frozenset(s for s in attrs.get("sharers", "").split("|") if s)
        total = int(attrs.get("total_count", "1"))
        layers.setdefault(layer, {})[pair] = SharedEdge(
            sharers=sharers, total_count=total
        )
    return {
        layer: SharedAssociationSet(provenance=f"graphml:{layer}", edges=edges)
        for layer, edges in layers.items()
    }


def edges_to_csv(
    layers: Mapping[str, SharedAssociationSet] | SharedAssociationSet,
    default_layer: str = "common",
) -> str:
    """CSV with columns a,b,sharers,total_count,layer (sharers |-joined)."""
    if isinstance(layers, SharedAssociationSet):
        layers = {default_layer: layers}
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["a", "b", "sharers", "total_count", "layer"])
    for layer in sorted(layers):
        for pair in sorted(layers[layer].edges):
            edge = layers[layer].edges[pair]
            w.writerow(
                [pair[0], pair[1], "|".join(sorted(edge.sharers)),
                 edge.total_count, layer]
            )
    return out.getvalue()


def edges_from_csv(text: str) -> dict[str, SharedAssociationSet]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != ["a", "b", "sharers", "total_count", "layer"]:
        raise ValueError(f"unexpected edge CSV header: {header}")
    layers: dict[str, dict] = {}
    for a, b, sharers_s, total_s, layer in reader:
        pair = canonical_pair(a, b)
        sharers = frozenset(s for s in sharers_s.split("|") if s)
        layers.setdefault(layer, {})[pair] = SharedEdge(
            sharers=sharers, total_count=int(total_s)
        )
    return {
        layer: SharedAssociationSet(provenance=f"csv:{layer}", edges=edges)
        for layer, edges in layers.items()
    }
