"""Command-line interface.

Subcommands: normalize, build, communities, intersect, tables, quotes,
run, serve.  All analysis output is CSV/JSON(L) on stdout or under an
--out directory; exit status 1 with a one-line message on domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bundle import (
    GroupSpec,
    PipelineParams,
    analyze,
    load_bundle,
    member_stats_rows,
    run_pipeline,
    write_network_csv,
)
from .concordance import find_association, find_concept
from .corpus import Document, Genre, load_corpus, load_lexicon, load_survey
from .errors import SosemnetError
from .focal import render_table
from .graphml import edges_to_csv, export_graphml
from .intersect import layered_map
from .normalize import DEFAULT_SEPARATORS, ConceptToken, normalize_document
from .semnet import concept_labels
from .socnet import girvan_newman, reconcile_ties


def _csv_row(values) -> str:
    import csv
    import io

    out = io.StringIO()
    csv.writer(out, lineterminator="\n").writerow(values)
    return out.getvalue().rstrip("\n")


def cmd_normalize(args) -> int:
    from .corpus import EMPTY_LEXICON

    path = Path(args.doc)
    lexicon = (
        load_lexicon(Path(args.stopwords), args.lang)
        if args.stopwords
        else EMPTY_LEXICON
    )
    doc = Document(
        doc_id=path.stem,
        member_id="-",
        genre=Genre.WRITTEN_TEXT,
        language=args.lang,
        path=str(path),
        body=path.read_text(encoding="utf-8"),
    )
    stream = normalize_document(
        doc,
        lexicon,
        separators=args.separators,
        comma_breaks=args.comma_breaks,
    )
    for item in stream.items:
        if isinstance(item, ConceptToken):
            t = item.token
            print(f"{t.start}\t{t.end}\tWord\t{t.surface}\t{item.stem}")
        else:
            print(f"{item.start}\t{item.end}\t{item.kind.value}\t{item.surface}\t")
    return 0


def cmd_build(args) -> int:
    corpus = load_corpus(args.corpus)
    params = PipelineParams(
        separators=args.separators, comma_breaks=args.comma_breaks
    )
    analysis = analyze(corpus, params)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for member_id, net in analysis.networks.items():
        write_network_csv(net, out / f"{member_id}.csv")
    rows = member_stats_rows(analysis)
    header = ["member", "role", "conversation", "interview", "written_text",
              "total", "associations", "shared"]
    lines = [_csv_row(header)]
    lines += [_csv_row([r[h] for h in header]) for r in rows]
    (out / "stats.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(analysis.networks)} network files + stats.csv to {out}")
    return 0


def cmd_communities(args) -> int:
    survey_path = Path(args.survey)
    ids: set[str] = set()
    import csv as _csv

    with survey_path.open(encoding="utf-8") as fh:
        reader = _csv.reader(fh)
        header = next(reader, None)
        for row in reader:
            if len(row) >= 2:
                ids.update((row[0].strip(), row[1].strip()))
    responses = load_survey(survey_path, ids)
    ties = reconcile_ties(responses)
    partition = girvan_newman(
        ties, target=args.k, weighted_distances=args.weighted
    )
    print(
        json.dumps(
            {
                "assignment": partition.assignment,
                "trace": partition.modularity_trace,
            },
            indent=2,
            sort_keys=True,
        )
    )
    if args.edges_out:
        lines = [_csv_row(["u", "v", "weight"])]
        lines += [_csv_row([t.u, t.v, t.weight]) for t in ties]
        Path(args.edges_out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return 0


def _layers_for(args):
    corpus = load_corpus(args.corpus)
    params = PipelineParams(
        separators=args.separators, comma_breaks=args.comma_breaks
    )
    analysis = analyze(corpus, params)
    spec_a = GroupSpec.parse(corpus, args.group_a)
    spec_b = GroupSpec.parse(corpus, args.group_b)
    lmap = layered_map(
        analysis.networks,
        spec_a.rule(args.min_total),
        spec_b.rule(args.min_total),
        specific_min_a=args.specific_min,
        specific_min_b=args.specific_min,
    )
    labels = concept_labels(
        analysis.networks.values(), glosses=corpus.glosses
    )
    return corpus, analysis, lmap, labels


def cmd_intersect(args) -> int:
    _, _, lmap, labels = _layers_for(args)
    layers = {
        "common": lmap.common,
        "specific_a": lmap.specific_a,
        "specific_b": lmap.specific_b,
    }
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for name, layer_set in layers.items():
            (out / f"{name}.csv").write_text(
                edges_to_csv(layer_set, default_layer=name), encoding="utf-8"
            )
        if any(s.edges for s in layers.values()):
            (out / "map.graphml").write_text(
                export_graphml(layers, labels=labels), encoding="utf-8"
            )
        print(f"wrote layers to {out}")
    else:
        sys.stdout.write(edges_to_csv(layers))
    return 0


def cmd_tables(args) -> int:
    _, _, lmap, labels = _layers_for(args)
    layer_set = lmap.layer(args.layer)
    table = render_table(layer_set, k=args.k, labels=labels)
    if args.format == "text":
        sys.stdout.write(table.text())
    else:
        sys.stdout.write(table.concepts_csv())
        sys.stdout.write("\n")
        sys.stdout.write(table.associations_csv())
    return 0


def cmd_quotes(args) -> int:
    corpus = load_corpus(args.corpus)
    scope = None
    if args.scope:
        scope = []
        collectives = corpus.collectives()
        for part in args.scope.split(","):
            part = part.strip()
            if part in collectives:
                scope.extend(corpus.collective_members(part))
            else:
                scope.append(part)
    if args.assoc:
        a, _, b = args.assoc.partition(",")
        if not b:
            print("--assoc expects two comma-separated stems", file=sys.stderr)
            return 2
        hits = find_association(
            corpus, a.strip(), b.strip(), scope=scope,
            context_sentences=args.context,
            separators=args.separators, comma_breaks=args.comma_breaks,
        )
    elif args.concept:
        hits = find_concept(
            corpus, args.concept.strip(), scope=scope,
            context_sentences=args.context,
            separators=args.separators, comma_breaks=args.comma_breaks,
        )
    else:
        print("pass --assoc a,b or --concept c", file=sys.stderr)
        return 2
    for h in hits:
        record = {
            "doc_id": h.doc_id,
            "member_id": h.member_id,
            "genre": h.genre,
            "sentence_index": h.sentence_index,
            "span": list(h.span),
            "context": h.context,
            "matched": list(h.matched) if isinstance(h.matched, tuple) else h.matched,
        }
        if args.format == "jsonl":
            print(json.dumps(record, ensure_ascii=False))
        else:
            print(f"[{h.member_id}/{h.doc_id}#{h.sentence_index}] {h.context}")
    return 0


def cmd_run(args) -> int:
    params = PipelineParams(
        group_a=args.group_a,
        group_b=args.group_b,
        min_total=args.min_total,
        specific_min=args.specific_min,
        table_k=args.k,
        separators=args.separators,
        comma_breaks=args.comma_breaks,
        communities_k=args.communities_k,
    )
    bundle = run_pipeline(args.manifest, args.out, params)
    print(f"bundle {bundle['digest'][:12]} written to {args.out}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    host, _, port_s = args.bind.rpartition(":")
    if not host or not port_s.isdigit():
        print(f"--bind expects host:port, got {args.bind!r}", file=sys.stderr)
        return 2
    meta, corpus, params = load_bundle(args.dir)
    app = create_app(corpus, params, bundle_dir=args.dir, bundle_meta=meta)
    try:
        uvicorn.run(app, host=host, port=int(port_s), log_level="warning")
    except OSError as exc:
        print(f"bind failure on {args.bind}: {exc}", file=sys.stderr)
        return 1
    return 0


def _add_text_options(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--separators", default=DEFAULT_SEPARATORS,
        help="sentence separator characters (default: . ! ? ; :)",
    )
    p.add_argument(
        "--comma-breaks", action="store_true",
        help="commas also break collocation adjacency",
    )


def _add_group_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--group-a", required=True,
                   help="collective code or member list, e.g. Z:min2")
    p.add_argument("--group-b", required=True, help="e.g. C:min2")
    p.add_argument("--specific-min", type=int, default=None,
                   help="min sharers for the group-specific layers")
    p.add_argument("--min-total", type=int, default=1,
                   help="stability floor on summed usage")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sosemnet",
        description="Socio-semantic network toolkit: member networks, shared "
        "meaning maps, communities, and quote concordances.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="debug-print the token stream of one file")
    p.add_argument("--doc", required=True)
    p.add_argument("--lang", required=True)
    p.add_argument("--stopwords")
    _add_text_options(p)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("build", help="build per-member semantic networks")
    p.add_argument("--corpus", required=True, help="manifest JSON path")
    p.add_argument("--out", required=True)
    _add_text_options(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("communities", help="interaction communities from a survey")
    p.add_argument("--survey", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--weighted", action="store_true",
                   help="use 5-weight distances for betweenness")
    p.add_argument("--edges-out", help="also write reconciled ties CSV")
    p.set_defaults(func=cmd_communities)

    p = sub.add_parser("intersect", help="layered shared-association map")
    p.add_argument("--corpus", required=True)
    _add_group_options(p)
    p.add_argument("--out")
    _add_text_options(p)
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("tables", help="focal concept/association tables")
    p.add_argument("--corpus", required=True)
    _add_group_options(p)
    p.add_argument("--layer", default="common",
                   choices=["common", "specific-a", "specific-b"])
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--format", default="csv", choices=["csv", "text"])
    _add_text_options(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("quotes", help="concordance quotes for a concept or pair")
    p.add_argument("--corpus", required=True)
    p.add_argument("--assoc", help="two comma-separated stems, e.g. a,b")
    p.add_argument("--concept")
    p.add_argument("--scope", help="comma list of collectives/member ids")
    p.add_argument("--context", type=int, default=0,
                   help="extra sentences either side of the match")
    p.add_argument("--format", default="jsonl", choices=["jsonl", "text"])
    _add_text_options(p)
    p.set_defaults(func=cmd_quotes)

    p = sub.add_parser("run", help="full pipeline into a bundle directory")
    p.add_argument("manifest")
    p.add_argument("--out", required=True)
    p.add_argument("--group-a")
    p.add_argument("--group-b")
    p.add_argument("--specific-min", type=int, default=None)
    p.add_argument("--min-total", type=int, default=1)
    p.add_argument("--k", type=int, default=10, help="table depth")
    p.add_argument("--communities-k", type=int, default=None)
    _add_text_options(p)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("serve", help="serve a bundle over HTTP")
    p.add_argument("dir")
    p.add_argument("--bind", default="127.0.0.1:8787")
    p.set_defaults(func=cmd_serve)

    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SosemnetError as exc:
        print(f"error [{type(exc).__name__}]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
