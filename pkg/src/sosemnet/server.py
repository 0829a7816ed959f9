"""Read-only JSON API over an analysis bundle, versioned under /api/v1.

Every endpoint is a pure view of the immutable corpus: layer and
community computations are memoized by their parameter signature, so
repeated identical requests return byte-identical bodies.  Errors are
JSON objects {code, message}.
"""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles

from . import errors as E
from .bundle import Analysis, GroupSpec, PipelineParams, analyze, member_stats_rows
from .concordance import find_association, find_concept
from .corpus import Corpus
from .focal import concept_focality, render_table, top_associations
from .graphml import export_graphml
from .intersect import layered_map
from .semnet import canonical_pair, network_stats
from .socnet import girvan_newman, reconcile_ties

_ERROR_STATUS = {
    E.UnknownMember: 404,
    E.UnknownConcept: 404,
    E.EmptySet: 404,
    E.EmptyGraph: 404,
    E.GroupTooSmall: 400,
    E.UnsupportedLanguage: 400,
}


def _code(exc: Exception) -> str:
    name = type(exc).__name__
    return "".join(
        ("_" + c.lower()) if c.isupper() else c for c in name
    ).lstrip("_")


def create_app(
    corpus: Corpus,
    params: PipelineParams | None = None,
    bundle_dir: Path | str | None = None,
    bundle_meta: dict | None = None,
) -> FastAPI:
    params = params or PipelineParams()
    analysis: Analysis = analyze(corpus, params)
    labels = analysis.labels
    label_to_stem: dict[str, str] = {}
    for stem_, label in sorted(labels.items()):
        label_to_stem.setdefault(label, stem_)

    app = FastAPI(title="sosemnet", openapi_url="/api/v1/openapi.json")

    @app.exception_handler(E.SosemnetError)
    async def _domain_error(request: Request, exc: E.SosemnetError):
        status = _ERROR_STATUS.get(type(exc), 400)
        return JSONResponse(
            status_code=status, content={"code": _code(exc), "message": str(exc)}
        )

    @app.exception_handler(RequestValidationError)
    async def _validation_error(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400, content={"code": "bad_request", "message": str(exc)}
        )

    @app.exception_handler(ValueError)
    async def _value_error(request: Request, exc: ValueError):
        return JSONResponse(
            status_code=400, content={"code": "bad_request", "message": str(exc)}
        )

    def resolve_stem(name: str) -> str:
        if any(name in net.concept_counts for net in analysis.networks.values()):
            return name
        return label_to_stem.get(name, name)

    def resolve_scope(scope: str | None) -> list[str] | None:
        if not scope:
            return None
        members: list[str] = []
        collectives = corpus.collectives()
        for part in scope.split(","):
            part = part.strip()
            if not part:
                continue
            if part in collectives:
                members.extend(corpus.collective_members(part))
            elif part in corpus.members:
                members.append(part)
            else:
                raise E.UnknownMember(part)
        return sorted(set(members))

    @lru_cache(maxsize=64)
    def cached_layers(a: str, b: str, min_a: int, min_b: int,
                      min_total: int, specific_min: int | None):
        spec_a = GroupSpec.parse(corpus, a, default_min=min_a)
        spec_b = GroupSpec.parse(corpus, b, default_min=min_b)
        lmap = layered_map(
            analysis.networks,
            spec_a.rule(min_total),
            spec_b.rule(min_total),
            specific_min_a=specific_min,
            specific_min_b=specific_min,
        )
        return spec_a, spec_b, lmap

    @lru_cache(maxsize=8)
    def cached_communities(k: int | None, weighted: bool):
        ties = reconcile_ties(corpus.survey)
        partition = girvan_newman(ties, target=k, weighted_distances=weighted)
        return ties, partition

    def default_group(which: int) -> str:
        configured = (params.group_a, params.group_b)[which]
        if configured:
            return configured
        collectives = corpus.collectives()
        if len(collectives) >= 2:
            return collectives[which]
        raise ValueError("corpus has fewer than two collectives; pass a and b")

    def effective(a, b, min_total, specific_min):
        """Fill unset layer parameters from the bundle's pipeline params."""
        return (
            a or default_group(0),
            b or default_group(1),
            params.min_total if min_total is None else min_total,
            params.specific_min if specific_min is None else specific_min,
        )

    def edge_payload(layer_set, layer_name):
        return [
            {
                "a": a,
                "b": b,
                "label_a": labels.get(a, a),
                "label_b": labels.get(b, b),
                "sharers": sorted(edge.sharers),
                "total_count": edge.total_count,
                "layer": layer_name,
            }
            for (a, b), edge in sorted(layer_set.edges.items())
        ]

    @app.get("/api/v1/members")
    def members():
        rows = member_stats_rows(analysis)
        collective = {m.id: m.collective for m in corpus.members.values()}
        return {
            "members": [
                {
                    "id": r["member"],
                    "collective": collective[r["member"]],
                    "role": r["role"],
                    "documents": len(corpus.documents_of(r["member"])),
                    "occurrences": r["total"],
                    "associations": r["associations"],
                    "shared_associations": r["shared"],
                }
                for r in rows
            ],
            "collectives": list(corpus.collectives()),
        }

    @app.get("/api/v1/networks/{member}")
    def network(member: str, full: bool = False, k: int = Query(10, ge=1)):
        if member not in analysis.networks:
            raise E.UnknownMember(member)
        net = analysis.networks[member]
        n_concepts, n_assoc = network_stats(net)
        body = {
            "member": member,
            "concepts": n_concepts,
            "occurrences": net.occurrences,
            "associations": n_assoc,
            "top_concepts": [
                {
                    "concept": f.concept,
                    "label": labels.get(f.concept, f.concept),
                    "unique_degree": f.unique_degree,
                    "weighted_degree": f.weighted_degree,
                }
                for f in concept_focality(net.associations)[:k]
            ],
            "top_associations": [
                {"a": a, "b": b, "count": count}
                for (a, b), count in top_associations(net.associations, k)
            ] if net.associations else [],
        }
        if full:
            body["edges"] = [
                {"a": a, "b": b, "count": count}
                for (a, b), count in sorted(net.associations.items())
            ]
        return body

    @app.get("/api/v1/layers")
    def layers(
        a: str | None = None,
        b: str | None = None,
        min_a: int = Query(2, ge=2),
        min_b: int = Query(2, ge=2),
        min_total: int | None = Query(None, ge=1),
        specific_min: int | None = Query(None, ge=2),
        include_edges: bool = True,
    ):
        a, b, min_total, specific_min = effective(a, b, min_total, specific_min)
        spec_a, spec_b, lmap = cached_layers(
            a, b, min_a, min_b, min_total, specific_min
        )
        named = (
            ("common", lmap.common),
            ("specific_a", lmap.specific_a),
            ("specific_b", lmap.specific_b),
        )
        body = {
            "params": {
                "a": {"label": spec_a.label, "members": sorted(spec_a.members),
                      "min_members": min_a},
                "b": {"label": spec_b.label, "members": sorted(spec_b.members),
                      "min_members": min_b},
                "min_total": min_total, "specific_min": specific_min,
            },
            "layers": {
                name: {
                    "edges": len(layer_set),
                    "total_count": layer_set.total(),
                    "concepts": len(layer_set.concepts()),
                }
                for name, layer_set in named
            },
        }
        if include_edges:
            body["edges"] = [
                e for name, layer_set in named for e in edge_payload(layer_set, name)
            ]
        return body

    @app.get("/api/v1/tables")
    def tables(
        layer: str = "common",
        k: int = Query(10, ge=1),
        a: str | None = None,
        b: str | None = None,
        min_a: int = Query(2, ge=2),
        min_b: int = Query(2, ge=2),
        min_total: int | None = Query(None, ge=1),
        specific_min: int | None = Query(None, ge=2),
    ):
        a, b, min_total, specific_min = effective(a, b, min_total, specific_min)
        _, _, lmap = cached_layers(a, b, min_a, min_b, min_total, specific_min)
        try:
            layer_set = lmap.layer(layer)
        except KeyError as exc:
            raise ValueError(str(exc)) from None
        table = render_table(layer_set, k=k, labels=labels)
        return {
            "layer": layer,
            "k": k,
            "concepts": [
                {
                    "concept": f.concept,
                    "label": labels.get(f.concept, f.concept),
                    "unique_degree": f.unique_degree,
                    "weighted_degree": f.weighted_degree,
                }
                for f in table.concepts
            ],
            "associations": [
                {
                    "a": a_, "b": b_,
                    "label_a": labels.get(a_, a_), "label_b": labels.get(b_, b_),
                    "total_count": count,
                }
                for (a_, b_), count in table.associations
            ],
        }

    @app.get("/api/v1/quotes")
    def quotes(
        a: str | None = None,
        b: str | None = None,
        concept: str | None = None,
        scope: str | None = None,
        context: int = Query(0, ge=0, le=3),
        offset: int = Query(0, ge=0),
        limit: int = Query(50, ge=1, le=500),
    ):
        members = resolve_scope(scope)
        if concept is not None:
            hits = find_concept(
                corpus, resolve_stem(concept), scope=members,
                context_sentences=context,
                separators=params.separators, comma_breaks=params.comma_breaks,
            )
            matched = {"concept": resolve_stem(concept)}
        elif a is not None and b is not None:
            pair = canonical_pair(resolve_stem(a), resolve_stem(b))
            hits = find_association(
                corpus, *pair, scope=members, context_sentences=context,
                separators=params.separators, comma_breaks=params.comma_breaks,
            )
            matched = {"a": pair[0], "b": pair[1]}
        else:
            raise ValueError("pass either concept= or both a= and b=")
        page = hits[offset : offset + limit]
        return {
            "matched": matched,
            "total": len(hits),
            "offset": offset,
            "limit": limit,
            "hits": [
                {
                    "doc_id": h.doc_id,
                    "member_id": h.member_id,
                    "genre": h.genre,
                    "sentence_index": h.sentence_index,
                    "span": list(h.span),
                    "context": h.context,
                    "context_span": list(h.context_span),
                    "matched": list(h.matched) if isinstance(h.matched, tuple)
                    else h.matched,
                }
                for h in page
            ],
        }

    @app.get("/api/v1/communities")
    def communities(k: int | None = Query(None, ge=1), weighted: bool = False):
        if not corpus.survey:
            raise E.EmptyGraph("corpus has no survey")
        ties, partition = cached_communities(k, weighted)
        return {
            "assignment": partition.assignment,
            "trace": [[n, q] for n, q in partition.modularity_trace],
            "edges": [
                {"u": t.u, "v": t.v, "weight": t.weight}
                for t in ties if t.weight > 0
            ],
        }

    @app.get("/api/v1/export/graphml")
    def export(
        layer: str = "all",
        a: str | None = None,
        b: str | None = None,
        min_a: int = Query(2, ge=2),
        min_b: int = Query(2, ge=2),
        min_total: int | None = Query(None, ge=1),
        specific_min: int | None = Query(None, ge=2),
    ):
        a, b, min_total, specific_min = effective(a, b, min_total, specific_min)
        _, _, lmap = cached_layers(a, b, min_a, min_b, min_total, specific_min)
        if layer == "all":
            layers_map = {
                "common": lmap.common,
                "specific_a": lmap.specific_a,
                "specific_b": lmap.specific_b,
            }
            layers_map = {n: s for n, s in layers_map.items() if s.edges}
            if not layers_map:
                raise E.EmptySet("no edges at these thresholds")
            xml = export_graphml(layers_map, labels=labels)
        else:
            try:
                layer_set = lmap.layer(layer)
            except KeyError as exc:
                raise ValueError(str(exc)) from None
            xml = export_graphml(layer_set, labels=labels, default_layer=layer)
        return Response(content=xml, media_type="application/xml")

    ui_dir = Path(bundle_dir) / "ui" if bundle_dir else None
    if ui_dir and (ui_dir / "index.html").is_file():
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    else:
        @app.get("/")
        def root():
            return {
                "service": "sosemnet",
                "version": (bundle_meta or {}).get("version", BUNDLE_FALLBACK),
                "endpoints": [
                    "/api/v1/members",
                    "/api/v1/networks/{member}",
                    "/api/v1/layers",
                    "/api/v1/tables",
                    "/api/v1/quotes",
                    "/api/v1/communities",
                    "/api/v1/export/graphml",
                ],
            }

    return app


BUNDLE_FALLBACK = "1"
