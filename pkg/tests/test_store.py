from __future__ import annotations

import json
import random
from pathlib import Path

import pytest

from javamap.model import ApplicationNode, SemanticModel
from javamap.scanner import FileKind, FileRecord
from javamap.store import (
    DanglingEdge,
    FORMAT_VERSION,
    FormatVersionMismatch,
    MalformedRow,
    MissingTable,
    load,
    persist,
)
from oracles import random_model

TABLES = ("application", "files", "packages", "classes", "edges")


def empty_model() -> SemanticModel:
    return SemanticModel(application=ApplicationNode(name="empty"))


def read(path: Path) -> str:
    return path.read_text(encoding="utf-8")


def test_empty_model_tables_have_headers_only(tmp_path):
    persist(empty_model(), str(tmp_path))
    for table in TABLES:
        lines = read(tmp_path / f"{table}.csv").splitlines()
        if table == "application":
            assert len(lines) == 2
        else:
            assert len(lines) == 1
    assert read(tmp_path / "files.csv") == "path,size,kind\n"


def test_fixture_row_counts(tmp_path, printshop_model):
    persist(printshop_model, str(tmp_path))
    classes = read(tmp_path / "classes.csv").splitlines()
    assert len(classes) == len(printshop_model.classes) + 1
    edges = read(tmp_path / "edges.csv").splitlines()
    assert len(edges) == len(printshop_model.relationships) + 1


def test_persist_twice_identical_tables(tmp_path, printshop_model):
    persist(printshop_model, str(tmp_path / "a"))
    persist(printshop_model, str(tmp_path / "b"))
    for table in TABLES:
        assert read(tmp_path / "a" / f"{table}.csv") == read(tmp_path / "b" / f"{table}.csv")


def test_roundtrip_empty(tmp_path):
    model = empty_model()
    persist(model, str(tmp_path))
    assert load(str(tmp_path)) == model


def test_roundtrip_fixture(tmp_path, printshop_model):
    persist(printshop_model, str(tmp_path))
    assert load(str(tmp_path)) == printshop_model


def test_roundtrip_random_models(tmp_path):
    rng = random.Random(20250811)
    for i in range(40):
        model = random_model(rng)
        out = tmp_path / f"m{i}"
        persist(model, str(out))
        assert load(str(out)) == model, f"model {i}"


def test_manifest_gates_version(tmp_path):
    persist(empty_model(), str(tmp_path))
    manifest = json.loads(read(tmp_path / "manifest.json"))
    assert manifest["format_version"] == FORMAT_VERSION
    manifest["format_version"] = FORMAT_VERSION + 1
    (tmp_path / "manifest.json").write_text(json.dumps(manifest))
    with pytest.raises(FormatVersionMismatch):
        load(str(tmp_path))


def test_missing_table(tmp_path):
    persist(empty_model(), str(tmp_path))
    (tmp_path / "classes.csv").unlink()
    with pytest.raises(MissingTable) as err:
        load(str(tmp_path))
    assert err.value.name == "classes.csv"


def test_missing_manifest(tmp_path):
    persist(empty_model(), str(tmp_path))
    (tmp_path / "manifest.json").unlink()
    with pytest.raises(MissingTable):
        load(str(tmp_path))


def test_malformed_row_reports_table_and_line(tmp_path):
    persist(empty_model(), str(tmp_path))
    files = tmp_path / "files.csv"
    files.write_text(files.read_text() + "a.java,notanumber,java_source\n")
    with pytest.raises(MalformedRow) as err:
        load(str(tmp_path))
    assert err.value.table == "files"
    assert err.value.line == 2


def test_dangling_edge_names_the_id(tmp_path, printshop_model):
    persist(printshop_model, str(tmp_path))
    edges = tmp_path / "edges.csv"
    edges.write_text(edges.read_text() + "extends,cls:printshop.core.Document,cls:missing.Type\n")
    with pytest.raises(DanglingEdge) as err:
        load(str(tmp_path))
    assert err.value.entity_id == "cls:missing.Type"


def test_quoting_survives_odd_names(tmp_path):
    model = empty_model()
    # A path with a comma and a quote exercises RFC-4180 quoting.
    record = FileRecord(path='dir/we,ird"name.java', size=3, kind=FileKind.JAVA_SOURCE)
    model.application.artifacts = [record]
    model.application.components = [record]
    persist(model, str(tmp_path))
    assert load(str(tmp_path)) == model
