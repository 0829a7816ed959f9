"""Shared fixtures and the acceptance-gate result reporter."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

DATA_DIR = Path(__file__).parent / "data"
DEMO_MANIFEST = DATA_DIR / "demo" / "manifest.json"

_ACCEPTANCE_RESULTS: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    if "test_acceptance.py" in report.nodeid:
        name = report.nodeid.rsplit("::", 1)[-1]
        _ACCEPTANCE_RESULTS.append((name, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, status in _ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"[PRIMARY] {name}: {status}")


def write_corpus(
    root: Path,
    docs: list[dict],
    members: list[dict] | None = None,
    stopwords: dict[str, list[str]] | None = None,
    survey_rows: list[tuple[str, str, int]] | None = None,
    glosses: dict[str, str] | None = None,
) -> Path:
    """Materialize a corpus on disk and return the manifest path.

    ``docs`` entries: {"member", "body", optional "genre", "language", "id"}.
    Members are inferred from the documents when not given explicitly.
    """
    root.mkdir(parents=True, exist_ok=True)
    (root / "docs").mkdir(exist_ok=True)
    if members is None:
        seen: list[str] = []
        for d in docs:
            if d["member"] not in seen:
                seen.append(d["member"])
        members = [{"id": m} for m in seen]
    doc_entries = []
    for i, d in enumerate(docs):
        doc_id = d.get("id", f"doc-{i}")
        path = root / "docs" / f"{doc_id}.txt"
        path.write_text(d["body"], encoding="utf-8")
        doc_entries.append(
            {
                "id": doc_id,
                "path": f"docs/{doc_id}.txt",
                "member": d["member"],
                "genre": d.get("genre", "written_text"),
                "language": d.get("language", "en"),
            }
        )
    manifest: dict = {"members": members, "documents": doc_entries}
    if stopwords:
        manifest["stopwords"] = {}
        for lang, entries in stopwords.items():
            lex = root / f"stop_{lang}.txt"
            lex.write_text("\n".join(entries) + "\n", encoding="utf-8")
            manifest["stopwords"][lang] = lex.name
    if survey_rows is not None:
        lines = ["rater,ratee,frequency"]
        lines += [f"{r},{e},{f}" for r, e, f in survey_rows]
        (root / "survey.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")
        manifest["survey"] = "survey.csv"
    if glosses:
        manifest["glosses"] = glosses
    manifest_path = root / "manifest.json"
    manifest_path.write_text(json.dumps(manifest, ensure_ascii=False), encoding="utf-8")
    return manifest_path


DIMA_BODY = "Dima makes bad performances: Dima's performances don't attract people"


@pytest.fixture
def dima_manifest(tmp_path) -> Path:
    return write_corpus(
        tmp_path / "dima",
        docs=[{"member": "DA", "body": DIMA_BODY, "id": "dima-1"}],
        stopwords={"en": ["don't"]},
    )


@pytest.fixture(scope="session")
def demo_manifest() -> Path:
    return DEMO_MANIFEST


@pytest.fixture(scope="session")
def demo_corpus():
    from sosemnet.corpus import load_corpus

    return load_corpus(DEMO_MANIFEST)
