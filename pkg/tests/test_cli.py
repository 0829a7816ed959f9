"""Command-line entry points: output formats, exit codes, error text."""

from __future__ import annotations

import csv
import io
import json

import pytest

from sosemnet.cli import main

from conftest import DATA_DIR, DEMO_MANIFEST


def run_cli(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text: str) -> list[list[str]]:
    return list(csv.reader(io.StringIO(text)))


# -- normalize -------------------------------------------------------------


def test_normalize_token_lines(tmp_path, capsys):
    doc = tmp_path / "note.txt"
    doc.write_text("Dima walks. Fast", encoding="utf-8")
    code, out, _ = run_cli(capsys, "normalize", "--doc", str(doc), "--lang", "en")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert rows[0] == ["0", "4", "Word", "Dima", "dima"]
    assert rows[1] == ["5", "10", "Word", "walks", "walk"]
    assert rows[2] == ["10", "11", "Separator", ".", ""]
    assert rows[3] == ["12", "16", "Word", "Fast", "fast"]


def test_normalize_marks_stopwords(tmp_path, capsys):
    doc = tmp_path / "note.txt"
    doc.write_text("the dog runs", encoding="utf-8")
    stops = tmp_path / "stop.txt"
    stops.write_text("# articles\nthe\n", encoding="utf-8")
    code, out, _ = run_cli(
        capsys, "normalize", "--doc", str(doc), "--lang", "en",
        "--stopwords", str(stops),
    )
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert rows[0][2] == "StopWord"
    assert rows[0][4] == ""  # stop words carry no stem
    assert rows[1][2:] == ["Word", "dog", "dog"]


def test_normalize_custom_separators(tmp_path, capsys):
    doc = tmp_path / "note.txt"
    doc.write_text("a|b.c", encoding="utf-8")
    code, out, _ = run_cli(
        capsys, "normalize", "--doc", str(doc), "--lang", "en",
        "--separators", "|",
    )
    assert code == 0
    kinds = [line.split("\t")[2] for line in out.splitlines()]
    # '|' separates, '.' no longer does, so b.c stays inside one word run
    assert kinds == ["Word", "Separator", "Word", "Word"]


# -- build -----------------------------------------------------------------


def test_build_writes_networks_and_stats(tmp_path, capsys):
    out_dir = tmp_path / "nets"
    code, out, _ = run_cli(
        capsys, "build", "--corpus", str(DEMO_MANIFEST), "--out", str(out_dir),
    )
    assert code == 0
    assert "6 network files" in out
    rows = parse_csv((out_dir / "CA.csv").read_text(encoding="utf-8"))
    assert rows[0] == ["a", "b", "count"]
    assert ["art", "contemporari", "2"] in rows
    stats = parse_csv((out_dir / "stats.csv").read_text(encoding="utf-8"))
    assert stats[0] == ["member", "role", "conversation", "interview",
                       "written_text", "total", "associations", "shared"]
    assert ["CA", "Artist", "0", "14", "0", "14", "5", "3"] in stats
    assert ["ZC", "Unspecified", "8", "0", "3", "11", "5", "4"] in stats


# -- communities -----------------------------------------------------------


def test_communities_json_and_edges(tmp_path, capsys):
    survey = DATA_DIR / "demo" / "survey.csv"
    edges_path = tmp_path / "ties.csv"
    code, out, _ = run_cli(
        capsys, "communities", "--survey", str(survey), "--k", "2",
        "--edges-out", str(edges_path),
    )
    assert code == 0
    body = json.loads(out)
    assert body["assignment"] == {
        "CA": 0, "CB": 0, "CC": 0, "ZA": 1, "ZB": 1, "ZC": 1
    }
    assert body["trace"][0] == [1, 0.0]
    ties = parse_csv(edges_path.read_text(encoding="utf-8"))
    assert ties[0] == ["u", "v", "weight"]
    assert ["CA", "CB", "4"] in ties
    assert ["ZC", "ZB", "3"] in ties or ["ZB", "ZC", "3"] in ties


def test_communities_natural_peak(capsys):
    survey = DATA_DIR / "demo" / "survey.csv"
    code, out, _ = run_cli(capsys, "communities", "--survey", str(survey))
    assert code == 0
    body = json.loads(out)
    groups = {m: c for m, c in body["assignment"].items()}
    assert groups["CA"] == groups["CB"] == groups["CC"]
    assert groups["ZA"] == groups["ZB"] == groups["ZC"]
    assert groups["CA"] != groups["ZA"]


# -- intersect -------------------------------------------------------------


def test_intersect_stdout(capsys):
    code, out, _ = run_cli(
        capsys, "intersect", "--corpus", str(DEMO_MANIFEST),
        "--group-a", "C", "--group-b", "Z", "--specific-min", "3",
    )
    assert code == 0
    rows = parse_csv(out)
    assert rows[0] == ["a", "b", "sharers", "total_count", "layer"]
    assert ["honest", "work", "CA|CB|ZA|ZC", "6", "common"] in rows
    assert ["art", "contemporari", "CA|CB|CC", "4", "specific_a"] in rows
    assert ["galleri", "small", "ZA|ZB|ZC", "4", "specific_b"] in rows


def test_intersect_out_dir(tmp_path, capsys):
    out_dir = tmp_path / "layers"
    code, out, _ = run_cli(
        capsys, "intersect", "--corpus", str(DEMO_MANIFEST),
        "--group-a", "C", "--group-b", "Z", "--specific-min", "3",
        "--out", str(out_dir),
    )
    assert code == 0
    for name in ["common.csv", "specific_a.csv", "specific_b.csv", "map.graphml"]:
        assert (out_dir / name).is_file(), name
    common = parse_csv((out_dir / "common.csv").read_text(encoding="utf-8"))
    assert ["public", "space", "CA|CC|ZA|ZC", "4", "common"] in common
    assert "<graphml" in (out_dir / "map.graphml").read_text(encoding="utf-8")


def test_intersect_min_total_prunes(capsys):
    code, out, _ = run_cli(
        capsys, "intersect", "--corpus", str(DEMO_MANIFEST),
        "--group-a", "C", "--group-b", "Z", "--specific-min", "3",
        "--min-total", "3",
    )
    assert code == 0
    rows = parse_csv(out)
    layers = {row[4] for row in rows[1:]}
    assert layers == {"specific_a", "specific_b"}


# -- tables ----------------------------------------------------------------


def test_tables_csv(capsys):
    code, out, _ = run_cli(
        capsys, "tables", "--corpus", str(DEMO_MANIFEST),
        "--group-a", "C", "--group-b", "Z", "--layer", "common", "--k", "5",
    )
    assert code == 0
    assert "concept,unique_degree,weighted_degree" in out
    assert "honest,1,6" in out
    assert "a,b,total_count" in out
    assert "honest,work,6" in out


def test_tables_text_layer_alias(capsys):
    code, out, _ = run_cli(
        capsys, "tables", "--corpus", str(DEMO_MANIFEST),
        "--group-a", "C", "--group-b", "Z", "--specific-min", "3",
        "--layer", "specific-b", "--format", "text",
    )
    assert code == 0
    assert "gallery - small 4" in out


# -- quotes ----------------------------------------------------------------


def test_quotes_jsonl(capsys):
    code, out, _ = run_cli(
        capsys, "quotes", "--corpus", str(DEMO_MANIFEST),
        "--assoc", "honest,work",
    )
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 6
    assert {r["member_id"] for r in records} == {"CA", "CB", "ZA", "ZC"}
    assert all(r["matched"] == ["honest", "work"] for r in records)


def test_quotes_scope_and_text_format(capsys):
    code, out, _ = run_cli(
        capsys, "quotes", "--corpus", str(DEMO_MANIFEST),
        "--assoc", "honest,work", "--scope", "Z", "--format", "text",
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert all(line.startswith("[Z") for line in lines)


def test_quotes_concept_with_context(capsys):
    code, out, _ = run_cli(
        capsys, "quotes", "--corpus", str(DEMO_MANIFEST),
        "--concept", "galleri", "--context", "1",
    )
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 5
    assert any("galleries" in r["context"] for r in records)


def test_quotes_usage_errors(capsys):
    code, _, err = run_cli(
        capsys, "quotes", "--corpus", str(DEMO_MANIFEST), "--assoc", "honest",
    )
    assert code == 2
    assert "comma-separated" in err
    code, _, err = run_cli(capsys, "quotes", "--corpus", str(DEMO_MANIFEST))
    assert code == 2


def test_quotes_unknown_concept_exit(capsys):
    code, _, err = run_cli(
        capsys, "quotes", "--corpus", str(DEMO_MANIFEST), "--concept", "zzzz",
    )
    assert code == 1
    assert "error [UnknownConcept]" in err


# -- run -------------------------------------------------------------------


def test_run_full_pipeline(tmp_path, capsys):
    out_dir = tmp_path / "bundle"
    code, out, _ = run_cli(
        capsys, "run", str(DEMO_MANIFEST), "--out", str(out_dir),
        "--group-a", "C", "--group-b", "Z", "--specific-min", "3",
        "--communities-k", "2",
    )
    assert code == 0
    assert "written to" in out
    meta = json.loads((out_dir / "bundle.json").read_text(encoding="utf-8"))
    assert out.split()[1] == meta["digest"][:12]
    for name in ["stats.csv", "communities.json", "map.graphml"]:
        assert (out_dir / name).is_file(), name


# -- error paths and serve -------------------------------------------------


def test_missing_manifest_domain_error(tmp_path, capsys):
    code, _, err = run_cli(
        capsys, "build", "--corpus", str(tmp_path / "nope.json"),
        "--out", str(tmp_path / "out"),
    )
    assert code == 1
    assert "error [MissingFile]" in err


def test_bad_group_spec_domain_error(capsys):
    code, _, err = run_cli(
        capsys, "intersect", "--corpus", str(DEMO_MANIFEST),
        "--group-a", "QQ", "--group-b", "Z",
    )
    assert code == 1
    assert "error [UnknownMember]" in err


def test_serve_rejects_malformed_bind(tmp_path, capsys):
    code, _, err = run_cli(capsys, "serve", str(tmp_path), "--bind", "nonsense")
    assert code == 2
    assert "host:port" in err


def test_unknown_subcommand_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
