"""On-disk persistence of the semantic model as a CSV table bundle.

Entity tables (application, files, packages, classes) and the relationship
table (edges) are separate files; byte-identical output for identical models
is guaranteed by canonical row ordering. The only timestamp lives in
manifest.json. Full schema: docs/store-schema.md.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass
from datetime import datetime, timezone

from . import __version__
from .model import (
    ApplicationNode,
    ClassNode,
    Edge,
    EdgeKind,
    PackageNode,
    PackageOrigin,
    SemanticModel,
    _canonicalize,
)
from .scanner import FileKind, FileRecord
from .syntax import TypeKind

FORMAT_VERSION = 1

MANIFEST_NAME = "manifest.json"

_TABLE_HEADERS = {
    "application": ["id", "name"],
    "files": ["path", "size", "kind"],
    "packages": ["id", "name", "origin", "total_source_bytes"],
    "classes": [
        "id", "qualified_name", "kind", "declaration_count", "method_count",
        "statement_count", "expression_count", "file_id", "resolved",
    ],
    "edges": ["kind", "from_id", "to_id"],
}


class StoreError(Exception):
    pass


class FormatVersionMismatch(StoreError):
    def __init__(self, found: object) -> None:
        super().__init__(f"store format version {found!r}, expected {FORMAT_VERSION}")
        self.found = found


class MissingTable(StoreError):
    def __init__(self, name: str) -> None:
        super().__init__(f"missing store file: {name}")
        self.name = name


class MalformedRow(StoreError):
    def __init__(self, table: str, line: int, detail: str) -> None:
        super().__init__(f"{table}.csv line {line}: {detail}")
        self.table = table
        self.line = line


class DanglingEdge(StoreError):
    def __init__(self, entity_id: str) -> None:
        super().__init__(f"edge references unknown entity {entity_id}")
        self.entity_id = entity_id


@dataclass
class StoreBundle:
    directory: str
    manifest: dict


def _render_table(name: str, rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_TABLE_HEADERS[name])
    writer.writerows(rows)
    return buf.getvalue()


def _bool(value: bool) -> str:
    return "true" if value else "false"


def persist(model: SemanticModel, out_dir: str) -> StoreBundle:
    """Write the model's table bundle under out_dir (created if needed)."""
    os.makedirs(out_dir, exist_ok=True)
    app = model.application
    tables = {
        "application": [[app.id, app.name]],
        "files": [[f.path, str(f.size), f.kind.value] for f in app.artifacts],
        "packages": [
            [p.id, p.name, p.origin.value, str(p.total_source_bytes)]
            for p in model.packages
        ],
        "classes": [
            [
                c.id, c.qualified_name, c.kind.value, str(c.declaration_count),
                str(c.method_count), str(c.statement_count), str(c.expression_count),
                c.file_id, _bool(c.resolved),
            ]
            for c in model.classes
        ],
        "edges": [[e.kind.value, e.from_id, e.to_id] for e in model.relationships],
    }
    for name, rows in tables.items():
        path = os.path.join(out_dir, f"{name}.csv")
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(_render_table(name, rows))
    manifest = {
        "format_version": FORMAT_VERSION,
        "tool_version": __version__,
        "application": app.name,
        "created_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }
    with open(os.path.join(out_dir, MANIFEST_NAME), "w", encoding="utf-8") as fh:
        fh.write(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return StoreBundle(directory=out_dir, manifest=manifest)


def _read_table(directory: str, name: str) -> list[tuple[int, list[str]]]:
    path = os.path.join(directory, f"{name}.csv")
    if not os.path.isfile(path):
        raise MissingTable(f"{name}.csv")
    with open(path, "r", encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0] != _TABLE_HEADERS[name]:
        raise MalformedRow(name, 1, f"bad header, expected {_TABLE_HEADERS[name]}")
    width = len(_TABLE_HEADERS[name])
    out = []
    for line_no, row in enumerate(rows[1:], start=2):
        if len(row) != width:
            raise MalformedRow(name, line_no, f"expected {width} columns, got {len(row)}")
        out.append((line_no, row))
    return out


def _parse_int(table: str, line: int, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise MalformedRow(table, line, f"not an integer: {text!r}") from None


def _parse_enum(table: str, line: int, enum_cls, text: str):
    try:
        return enum_cls(text)
    except ValueError:
        raise MalformedRow(table, line, f"bad {enum_cls.__name__} value: {text!r}") from None


def load(directory: str) -> SemanticModel:
    """Reload a persisted model; load(persist(m)) is structurally equal to m.

    Raises FormatVersionMismatch, MissingTable, MalformedRow, or DanglingEdge
    (referential check over the edges table).
    """
    manifest_path = os.path.join(directory, MANIFEST_NAME)
    if not os.path.isfile(manifest_path):
        raise MissingTable(MANIFEST_NAME)
    with open(manifest_path, "r", encoding="utf-8") as fh:
        manifest = json.load(fh)
    if manifest.get("format_version") != FORMAT_VERSION:
        raise FormatVersionMismatch(manifest.get("format_version"))

    app_rows = _read_table(directory, "application")
    if len(app_rows) != 1:
        raise MalformedRow("application", 2, "expected exactly one application row")
    app_id, app_name = app_rows[0][1]
    if app_id != f"app:{app_name}":
        raise MalformedRow("application", 2, f"id {app_id!r} does not match name {app_name!r}")

    files = []
    for line_no, (path, size, kind) in _read_table(directory, "files"):
        files.append(
            FileRecord(
                path=path,
                size=_parse_int("files", line_no, size),
                kind=_parse_enum("files", line_no, FileKind, kind),
            )
        )
    app = ApplicationNode(
        name=app_name,
        artifacts=files,
        components=[f for f in files if f.kind is FileKind.JAVA_SOURCE],
    )

    packages = []
    for line_no, (pid, name, origin, source_bytes) in _read_table(directory, "packages"):
        if pid != f"pkg:{name}":
            raise MalformedRow("packages", line_no, f"id {pid!r} does not match name {name!r}")
        packages.append(
            PackageNode(
                name=name,
                origin=_parse_enum("packages", line_no, PackageOrigin, origin),
                total_source_bytes=_parse_int("packages", line_no, source_bytes),
            )
        )

    classes = []
    for line_no, row in _read_table(directory, "classes"):
        cid, qualified, kind, declarations, methods, statements, expressions, file_id, resolved = row
        if cid != f"cls:{qualified}":
            raise MalformedRow("classes", line_no, f"id {cid!r} does not match name {qualified!r}")
        if resolved not in ("true", "false"):
            raise MalformedRow("classes", line_no, f"bad boolean: {resolved!r}")
        classes.append(
            ClassNode(
                qualified_name=qualified,
                kind=_parse_enum("classes", line_no, TypeKind, kind),
                declaration_count=_parse_int("classes", line_no, declarations),
                method_count=_parse_int("classes", line_no, methods),
                statement_count=_parse_int("classes", line_no, statements),
                expression_count=_parse_int("classes", line_no, expressions),
                file_id=file_id,
                resolved=resolved == "true",
            )
        )

    edges = []
    for line_no, (kind, from_id, to_id) in _read_table(directory, "edges"):
        edges.append(Edge(_parse_enum("edges", line_no, EdgeKind, kind), from_id, to_id))

    model = SemanticModel(
        application=app, packages=packages, classes=classes, relationships=edges
    )
    pkg_ids = {p.id: p for p in model.packages}
    cls_ids = {c.id for c in model.classes}
    for edge in edges:
        if edge.kind is EdgeKind.CONTAINS:
            if edge.from_id not in pkg_ids:
                raise DanglingEdge(edge.from_id)
            if edge.to_id not in cls_ids:
                raise DanglingEdge(edge.to_id)
            pkg_ids[edge.from_id].member_class_ids.append(edge.to_id)
        elif edge.kind is EdgeKind.IMPORTS:
            for endpoint in (edge.from_id, edge.to_id):
                if endpoint not in pkg_ids:
                    raise DanglingEdge(endpoint)
        else:
            for endpoint in (edge.from_id, edge.to_id):
                if endpoint not in cls_ids:
                    raise DanglingEdge(endpoint)
    _canonicalize(model)
    model.validate()
    return model
