"""End-to-end pipeline: corpus -> networks -> layers -> tables -> files.

A bundle directory holds every derived artifact plus bundle.json with a
content digest.  The digest covers the corpus input bytes and the
analysis parameters, so re-running on unchanged inputs reproduces it
bit-for-bit (no timestamps).
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .corpus import Corpus, Genre, load_corpus
from .errors import EmptySet, MalformedManifest, UnknownMember
from .focal import render_table
from .graphml import edges_to_csv, export_graphml
from .intersect import SharingRule, giant_component, layered_map, shared_with_anyone
from .normalize import DEFAULT_SEPARATORS, NormalizedDocument, normalize_document
from .semnet import (
    SemanticNetwork,
    build_member_network,
    concept_labels,
    genre_occurrences,
)
from .socnet import girvan_newman, reconcile_ties

BUNDLE_VERSION = "1"


@dataclass(frozen=True)
class GroupSpec:
    label: str
    members: frozenset[str]
    min_members: int = 2

    @staticmethod
    def parse(corpus: Corpus, spec: str, default_min: int = 2) -> "GroupSpec":
        """"Z"                -> collective Z, min 2
        "Z:min3"           -> collective Z, min 3
        "CA,CB,CC:min3"    -> explicit member list, min 3
        """
        name, _, opt = spec.partition(":")
        min_members = default_min
        if opt:
            if not opt.startswith("min"):
                raise ValueError(f"bad group option {opt!r} in {spec!r}")
            min_members = int(opt[3:])
        collectives = corpus.collectives()
        if name in collectives:
            members = frozenset(corpus.collective_members(name))
            label = name
        else:
            ids = [m.strip() for m in name.split(",") if m.strip()]
            for m in ids:
                if m not in corpus.members:
                    raise UnknownMember(m)
            members = frozenset(ids)
            label = "+".join(sorted(ids))
        return GroupSpec(label=label, members=members, min_members=min_members)

    def rule(self, min_total: int = 1) -> SharingRule:
        return SharingRule(
            group=self.members, min_members=self.min_members, min_total_count=min_total
        )


@dataclass(frozen=True)
class PipelineParams:
    group_a: str | None = None
    group_b: str | None = None
    min_total: int = 1
    specific_min: int | None = None
    table_k: int = 10
    separators: str = DEFAULT_SEPARATORS
    comma_breaks: bool = False
    communities_k: int | None = None
    weighted_distances: bool = False

    def canonical(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


@dataclass
class Analysis:
    corpus: Corpus
    streams: dict[str, tuple[NormalizedDocument, ...]]
    networks: dict[str, SemanticNetwork]
    params: PipelineParams = field(default_factory=PipelineParams)

    @property
    def labels(self) -> dict[str, str]:
        return concept_labels(self.networks.values(), glosses=self.corpus.glosses)


def analyze(corpus: Corpus, params: PipelineParams | None = None) -> Analysis:
    params = params or PipelineParams()
    streams: dict[str, tuple[NormalizedDocument, ...]] = {}
    networks: dict[str, SemanticNetwork] = {}
    for member_id in corpus.members:
        docs = corpus.documents_of(member_id)
        streams[member_id] = tuple(
            normalize_document(
                doc,
                corpus.lexicon_for(doc.language),
                separators=params.separators,
                comma_breaks=params.comma_breaks,
            )
            for doc in docs
        )
        networks[member_id] = build_member_network(streams[member_id], member_id)
    return Analysis(corpus=corpus, streams=streams, networks=networks, params=params)


def member_stats_rows(analysis: Analysis) -> list[dict]:
    """Per-member rows: genre occurrence counts, association totals, and
    the count of associations shared with at least one other member."""
    rows = []
    for member_id, member in analysis.corpus.members.items():
        genres = genre_occurrences(analysis.streams[member_id])
        net = analysis.networks[member_id]
        shared = shared_with_anyone(analysis.networks, member_id)
        rows.append(
            {
                "member": member_id,
                "role": member.role.value,
                "conversation": genres[Genre.CONVERSATION],
                "interview": genres[Genre.INTERVIEW],
                "written_text": genres[Genre.WRITTEN_TEXT],
                "total": net.occurrences,
                "associations": len(net.associations),
                "shared": len(shared),
            }
        )
    return rows


def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    path.write_text(out.getvalue(), encoding="utf-8")


def write_network_csv(net: SemanticNetwork, path: Path) -> None:
    _write_csv(
        path,
        ["a", "b", "count"],
        [[a, b, c] for (a, b), c in sorted(net.associations.items())],
    )


def default_groups(corpus: Corpus, params: PipelineParams) -> tuple[GroupSpec, GroupSpec] | None:
    if params.group_a and params.group_b:
        return (
            GroupSpec.parse(corpus, params.group_a),
            GroupSpec.parse(corpus, params.group_b),
        )
    collectives = corpus.collectives()
    if len(collectives) >= 2:
        return (
            GroupSpec.parse(corpus, collectives[0]),
            GroupSpec.parse(corpus, collectives[1]),
        )
    return None


def run_pipeline(
    manifest_path: Path | str,
    out_dir: Path | str,
    params: PipelineParams | None = None,
) -> dict:
    """Run everything and write the bundle; returns the bundle manifest."""
    params = params or PipelineParams()
    corpus = load_corpus(manifest_path)
    analysis = analyze(corpus, params)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files: list[str] = []

    def record(relative: str) -> Path:
        files.append(relative)
        path = out / relative
        path.parent.mkdir(parents=True, exist_ok=True)
        return path

    for member_id, net in analysis.networks.items():
        write_network_csv(net, record(f"networks/{member_id}.csv"))

    stats = member_stats_rows(analysis)
    _write_csv(
        record("stats.csv"),
        list(stats[0].keys()) if stats else
        ["member", "role", "conversation", "interview", "written_text",
         "total", "associations", "shared"],
        [list(r.values()) for r in stats],
    )

    layer_summary: dict[str, int] = {}
    groups = default_groups(corpus, params)
    if groups:
        spec_a, spec_b = groups
        lmap = layered_map(
            analysis.networks,
            spec_a.rule(params.min_total),
            spec_b.rule(params.min_total),
            specific_min_a=params.specific_min,
            specific_min_b=params.specific_min,
        )
        labels = analysis.labels
        layers = {
            "common": lmap.common,
            "specific_a": lmap.specific_a,
            "specific_b": lmap.specific_b,
        }
        for name, layer_set in layers.items():
            layer_summary[name] = len(layer_set)
            record(f"layers/{name}.csv").write_text(
                edges_to_csv(layer_set, default_layer=name), encoding="utf-8"
            )
            table = render_table(layer_set, k=params.table_k, labels=labels)
            record(f"tables/{name}_concepts.csv").write_text(
                table.concepts_csv(), encoding="utf-8"
            )
            record(f"tables/{name}_associations.csv").write_text(
                table.associations_csv(), encoding="utf-8"
            )
        if any(s.edges for s in layers.values()):
            record("map.graphml").write_text(
                export_graphml(layers, labels=labels), encoding="utf-8"
            )
        try:
            giant = giant_component(lmap.common)
            record("giant.graphml").write_text(
                export_graphml(giant, labels=labels), encoding="utf-8"
            )
        except EmptySet:
            pass

    communities = None
    if corpus.survey:
        ties = reconcile_ties(corpus.survey)
        partition = girvan_newman(
            ties,
            target=params.communities_k,
            weighted_distances=params.weighted_distances,
        )
        communities = {
            "assignment": partition.assignment,
            "trace": partition.modularity_trace,
            "edges": [[t.u, t.v, t.weight] for t in ties if t.weight > 0],
        }
        record("communities.json").write_text(
            json.dumps(communities, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )

    digest = hashlib.sha256(
        (corpus.digest + "\n" + params.canonical()).encode()
    ).hexdigest()
    bundle = {
        "version": BUNDLE_VERSION,
        "digest": digest,
        "corpus_digest": corpus.digest,
        "manifest": str(Path(manifest_path).resolve()),
        "params": asdict(params),
        "collectives": list(corpus.collectives()),
        "groups": (
            {"a": groups[0].label, "b": groups[1].label} if groups else None
        ),
        "members": [
            {
                "id": r["member"],
                "role": r["role"],
                "occurrences": r["total"],
                "associations": r["associations"],
                "shared": r["shared"],
            }
            for r in stats
        ],
        "layers": layer_summary,
        "files": sorted(files),
    }
    (out / "bundle.json").write_text(
        json.dumps(bundle, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return bundle


def load_bundle(bundle_dir: Path | str) -> tuple[dict, Corpus, PipelineParams]:
    bundle_dir = Path(bundle_dir)
    meta_path = bundle_dir / "bundle.json"
    if not meta_path.is_file():
        raise MalformedManifest(f"{meta_path}: not a bundle directory")
    meta = json.loads(meta_path.read_text(encoding="utf-8"))
    corpus = load_corpus(meta["manifest"])
    params = PipelineParams(**meta.get("params", {}))
    return meta, corpus, params
