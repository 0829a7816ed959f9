"""End-to-end pipeline runs, bundle layout, and reproducible digests."""

from __future__ import annotations

import json

import pytest

from sosemnet.bundle import (
    GroupSpec,
    PipelineParams,
    analyze,
    load_bundle,
    member_stats_rows,
    run_pipeline,
)
from sosemnet.errors import GroupTooSmall, MalformedManifest, UnknownMember


DEMO_PARAMS = PipelineParams(
    group_a="C", group_b="Z", specific_min=3, communities_k=2
)


@pytest.fixture(scope="module")
def demo_bundle(tmp_path_factory, demo_manifest):
    out = tmp_path_factory.mktemp("bundle")
    meta = run_pipeline(demo_manifest, out, DEMO_PARAMS)
    return out, meta


def test_bundle_files_exist(demo_bundle):
    out, meta = demo_bundle
    for rel in [
        "bundle.json", "stats.csv", "map.graphml", "giant.graphml",
        "communities.json",
        "layers/common.csv", "layers/specific_a.csv", "layers/specific_b.csv",
        "tables/common_concepts.csv", "tables/common_associations.csv",
        "networks/CA.csv", "networks/ZC.csv",
    ]:
        assert (out / rel).is_file(), rel
    assert sorted(meta["files"]) == meta["files"]


def test_layer_contents(demo_bundle):
    out, _ = demo_bundle
    common = (out / "layers/common.csv").read_text(encoding="utf-8").strip()
    lines = common.split("\n")
    assert lines[0] == "a,b,sharers,total_count,layer"
    assert "honest,work,CA|CB|ZA|ZC,6,common" in lines
    assert "public,space,CA|CC|ZA|ZC,4,common" in lines
    spec_a = (out / "layers/specific_a.csv").read_text(encoding="utf-8")
    assert "art,contemporari,CA|CB|CC,4,specific_a" in spec_a
    spec_b = (out / "layers/specific_b.csv").read_text(encoding="utf-8")
    assert "galleri,small,ZA|ZB|ZC,4,specific_b" in spec_b


def test_stats_rows(demo_bundle):
    out, _ = demo_bundle
    lines = (out / "stats.csv").read_text(encoding="utf-8").strip().split("\n")
    assert lines[0] == (
        "member,role,conversation,interview,written_text,total,associations,shared"
    )
    rows = {ln.split(",")[0]: ln.split(",") for ln in lines[1:]}
    assert rows["CA"][1:] == ["Artist", "0", "14", "0", "14", "5", "3"]
    assert rows["ZC"][1:] == ["Unspecified", "8", "0", "3", "11", "5", "4"]


def test_communities_output(demo_bundle):
    out, _ = demo_bundle
    data = json.loads((out / "communities.json").read_text(encoding="utf-8"))
    assert data["assignment"] == {
        "CA": 0, "CB": 0, "CC": 0, "ZA": 1, "ZB": 1, "ZC": 1
    }
    assert [n for n, _ in data["trace"]] == [1, 2]
    assert ["CB", "ZB", 0] not in [list(e) for e in data["edges"]]


def test_digest_reproducible(demo_bundle, demo_manifest, tmp_path):
    _, meta = demo_bundle
    again = run_pipeline(demo_manifest, tmp_path / "again", DEMO_PARAMS)
    assert meta["digest"] == again["digest"]
    assert meta["corpus_digest"] == again["corpus_digest"]


def test_digest_tracks_params(demo_bundle, demo_manifest, tmp_path):
    _, meta = demo_bundle
    other = run_pipeline(
        demo_manifest,
        tmp_path / "other",
        PipelineParams(group_a="C", group_b="Z", specific_min=2,
                       communities_k=2),
    )
    assert meta["digest"] != other["digest"]
    assert meta["corpus_digest"] == other["corpus_digest"]


def test_no_timestamps_in_bundle(demo_bundle):
    out, _ = demo_bundle
    meta = json.loads((out / "bundle.json").read_text(encoding="utf-8"))
    flat = json.dumps(meta).lower()
    assert "time" not in flat
    assert "date" not in flat


def test_load_bundle_roundtrip(demo_bundle):
    out, meta = demo_bundle
    loaded_meta, corpus, params = load_bundle(out)
    assert loaded_meta["digest"] == meta["digest"]
    assert params == DEMO_PARAMS
    assert set(corpus.members) == {"CA", "CB", "CC", "ZA", "ZB", "ZC"}


def test_load_bundle_missing(tmp_path):
    with pytest.raises(MalformedManifest):
        load_bundle(tmp_path)


def test_group_spec_parsing(demo_corpus):
    spec = GroupSpec.parse(demo_corpus, "Z")
    assert spec.members == frozenset({"ZA", "ZB", "ZC"})
    assert spec.min_members == 2
    spec3 = GroupSpec.parse(demo_corpus, "Z:min3")
    assert spec3.min_members == 3
    listed = GroupSpec.parse(demo_corpus, "CA,CB:min2")
    assert listed.members == frozenset({"CA", "CB"})
    with pytest.raises(UnknownMember):
        GroupSpec.parse(demo_corpus, "QQ")
    with pytest.raises(ValueError):
        GroupSpec.parse(demo_corpus, "Z:minx")


def test_group_spec_rule_too_small(demo_corpus):
    spec = GroupSpec.parse(demo_corpus, "CA,CB:min3")
    with pytest.raises(GroupTooSmall):
        spec.rule(1)


def test_params_canonical_stable():
    a = PipelineParams(group_a="C", group_b="Z", table_k=10)
    b = PipelineParams(group_b="Z", group_a="C", table_k=10)
    assert a.canonical() == b.canonical()
    assert a.canonical() != PipelineParams(group_a="C", group_b="Z",
                                           table_k=12).canonical()


def test_member_stats_rows_against_networks(demo_corpus):
    analysis = analyze(demo_corpus, DEMO_PARAMS)
    rows = {r["member"]: r for r in member_stats_rows(analysis)}
    for member, net in analysis.networks.items():
        assert rows[member]["associations"] == len(net.associations)
        assert rows[member]["total"] == net.occurrences
        genre_sum = (
            rows[member]["conversation"]
            + rows[member]["interview"]
            + rows[member]["written_text"]
        )
        assert genre_sum == rows[member]["total"]


def test_analysis_labels_include_glosses(demo_corpus):
    analysis = analyze(demo_corpus, DEMO_PARAMS)
    assert analysis.labels["современ"] == "contemporary-ru"
    assert analysis.labels["galleri"] == "gallery"
    assert analysis.labels["contemporari"] == "contemporary"


def test_pipeline_without_survey(tmp_path, demo_manifest):
    manifest = json.loads(demo_manifest.read_text(encoding="utf-8"))
    del manifest["survey"]
    stripped = tmp_path / "m"
    stripped.mkdir()
    for rel in ["docs", "stop_en.txt", "stop_ru.txt"]:
        src = demo_manifest.parent / rel
        if src.is_dir():
            (stripped / rel).mkdir()
            for f in src.iterdir():
                (stripped / rel / f.name).write_bytes(f.read_bytes())
        else:
            (stripped / rel).write_bytes(src.read_bytes())
    path = stripped / "manifest.json"
    path.write_text(json.dumps(manifest, ensure_ascii=False), encoding="utf-8")
    out = tmp_path / "out"
    run_pipeline(path, out, PipelineParams(group_a="C", group_b="Z"))
    assert not (out / "communities.json").exists()
    assert (out / "map.graphml").is_file()
