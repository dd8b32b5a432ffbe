"""Independent oracles used to cross-check production code.

These deliberately use different algorithms from the implementation:
reflection-based tree walking instead of the explicit child lists in
javamap.syntax, brute-force path enumeration instead of decision-point
counting, and chain walking instead of memoized depth computation.
"""

from __future__ import annotations

import dataclasses
import random

from javamap import syntax as ast
from javamap.model import (
    ApplicationNode,
    ClassNode,
    Edge,
    EdgeKind,
    PackageNode,
    PackageOrigin,
    SemanticModel,
    _canonicalize,
    class_id,
)
from javamap.scanner import FileKind, FileRecord
from javamap.syntax import TypeKind
from javamap.treemap import TreemapLayout


# --- reflection walk ---------------------------------------------------------


def reflect_walk(node):
    """Yield every dataclass instance reachable from node, node included."""
    if not dataclasses.is_dataclass(node):
        return
    yield node
    for f in dataclasses.fields(node):
        value = getattr(node, f.name)
        if dataclasses.is_dataclass(value):
            yield from reflect_walk(value)
        elif isinstance(value, list):
            for item in value:
                yield from reflect_walk(item)


def decision_points_by_reflection(body: ast.Block) -> int:
    count = 0
    for node in reflect_walk(body):
        if isinstance(node, (ast.If, ast.While, ast.DoWhile, ast.For, ast.Ternary)):
            count += 1
        elif isinstance(node, ast.Switch):
            count += sum(len(g.labels) for g in node.groups)
        elif isinstance(node, ast.Try):
            count += len(node.catches)
        elif isinstance(node, ast.Binary) and node.op in ("&&", "||"):
            count += 1
    return count


def count_nodes_by_reflection(decl: ast.TypeDecl) -> tuple[int, int, int, int]:
    """(declarations, methods, statements, expressions) via the generic walk."""
    declarations = 0
    statements = 0
    expressions = 0
    for node in reflect_walk(decl):
        if isinstance(node, ast.FieldDecl):
            declarations += len(node.names)
        elif isinstance(node, ast.LocalDecl):
            declarations += len(node.names)
        if isinstance(node, ast.Stmt) and not isinstance(node, (ast.Block, ast.Empty)):
            statements += 1
        if isinstance(node, ast.Expr):
            expressions += 1
    return declarations, len(decl.methods), statements, expressions


# --- execution path enumeration ----------------------------------------------


def nested_if_paths(method: ast.MethodDecl) -> int | None:
    """Execution paths through a body built only from nested if/else.

    Returns None when the body is out of scope for the oracle: loops,
    switch, try, throw, break/continue, early returns, more than one
    branching statement in any sequence, or any short-circuit/ternary
    operator in a condition. For in-scope bodies, the count of distinct
    root-to-exit paths equals cyclomatic complexity.
    """
    if method.body is None:
        return None
    for node in reflect_walk(method.body):
        if isinstance(node, ast.Ternary):
            return None
        if isinstance(node, ast.Binary) and node.op in ("&&", "||"):
            return None

    def stmt_paths(stmt: ast.Stmt) -> int | None:
        if isinstance(stmt, ast.Block):
            return seq_paths(stmt.stmts, allow_trailing_return=False)
        if isinstance(stmt, ast.If):
            then_paths = stmt_paths(stmt.then_branch)
            if then_paths is None:
                return None
            if stmt.else_branch is None:
                return then_paths + 1
            else_paths = stmt_paths(stmt.else_branch)
            if else_paths is None:
                return None
            return then_paths + else_paths
        if isinstance(stmt, (ast.ExprStmt, ast.LocalDecl, ast.Empty)):
            return 1
        return None

    def seq_paths(stmts: list[ast.Stmt], allow_trailing_return: bool) -> int | None:
        branching = 0
        paths = 1
        for i, stmt in enumerate(stmts):
            if isinstance(stmt, ast.Return):
                if allow_trailing_return and i == len(stmts) - 1:
                    continue
                return None
            sub = stmt_paths(stmt)
            if sub is None:
                return None
            if sub > 1:
                branching += 1
                if branching > 1:
                    return None
                paths = sub
        return paths

    return seq_paths(method.body.stmts, allow_trailing_return=True)


# --- inheritance --------------------------------------------------------------


def longest_extends_chain(parent: dict[str, str]) -> int:
    best = 0
    for node in set(parent) | set(parent.values()):
        length = 0
        cur = node
        while cur in parent:
            cur = parent[cur]
            length += 1
        best = max(best, length)
    return best


def random_inheritance_forest(rng: random.Random) -> SemanticModel:
    """A one-package model with a random acyclic single-parent forest."""
    n = rng.randint(1, 30)
    classes = [ClassNode(qualified_name=f"p.C{i}", kind=TypeKind.CLASS) for i in range(n)]
    edges = []
    for i in range(1, n):
        if rng.random() < 0.7:
            parent = rng.randrange(i)
            edges.append(Edge(EdgeKind.EXTENDS, classes[i].id, classes[parent].id))
    pkg = PackageNode(
        name="p",
        origin=PackageOrigin.PROJECT_FILE,
        member_class_ids=[c.id for c in classes],
    )
    edges.extend(Edge(EdgeKind.CONTAINS, pkg.id, c.id) for c in classes)
    model = SemanticModel(
        application=ApplicationNode(name="forest"),
        packages=[pkg],
        classes=classes,
        relationships=edges,
    )
    _canonicalize(model)
    model.validate()
    return model


# --- random models for store round-trips ---------------------------------------


_PKG_POOL = ["", "app.core", "app.io", "app.net", "util", "third.party.lib"]


def random_model(rng: random.Random) -> SemanticModel:
    files = []
    for i in range(rng.randint(0, 8)):
        kind = rng.choice(list(FileKind))
        suffix = {
            FileKind.JAVA_SOURCE: ".java",
            FileKind.COMPILED_CLASS: ".class",
            FileKind.JAR_ARCHIVE: ".jar",
            FileKind.IMAGE: ".png",
            FileKind.OTHER_ARTIFACT: ".txt",
        }[kind]
        files.append(FileRecord(path=f"dir{i % 3}/file{i}{suffix}", size=rng.randint(0, 9999), kind=kind))
    files.sort(key=lambda f: f.path)
    app = ApplicationNode(
        name=f"app{rng.randint(0, 99)}",
        artifacts=files,
        components=[f for f in files if f.kind is FileKind.JAVA_SOURCE],
    )

    pkg_names = rng.sample(_PKG_POOL, rng.randint(0, len(_PKG_POOL)))
    packages = []
    classes: list[ClassNode] = []
    edges: list[Edge] = []
    for name in pkg_names:
        origin = rng.choice([PackageOrigin.PROJECT_FILE, PackageOrigin.LIBRARY])
        pkg = PackageNode(name=name, origin=origin, total_source_bytes=rng.randint(0, 10_000))
        packages.append(pkg)
        for i in range(rng.randint(0, 4)):
            simple = f"T{len(classes)}"
            qualified = f"{name}.{simple}" if name else simple
            resolved = rng.random() < 0.8
            cls = ClassNode(
                qualified_name=qualified,
                kind=rng.choice([TypeKind.CLASS, TypeKind.INTERFACE]),
                declaration_count=rng.randint(0, 20),
                method_count=rng.randint(0, 20),
                statement_count=rng.randint(0, 99),
                expression_count=rng.randint(0, 200),
                file_id="" if not resolved else f"src/{simple}.java",
                resolved=resolved,
            )
            classes.append(cls)
            pkg.member_class_ids.append(cls.id)
            edges.append(Edge(EdgeKind.CONTAINS, pkg.id, cls.id))

    for i, cls in enumerate(classes):
        if i and rng.random() < 0.5:
            parent = classes[rng.randrange(i)]
            edges.append(Edge(EdgeKind.EXTENDS, cls.id, parent.id))
        interfaces = [c for c in classes[:i] if c.kind is TypeKind.INTERFACE]
        if interfaces and rng.random() < 0.4:
            edges.append(Edge(EdgeKind.IMPLEMENTS, cls.id, rng.choice(interfaces).id))

    for _ in range(rng.randint(0, 4)):
        if len(packages) >= 2:
            a, b = rng.sample(packages, 2)
            edges.append(Edge(EdgeKind.IMPORTS, a.id, b.id))

    model = SemanticModel(application=app, packages=packages, classes=classes, relationships=edges)
    _canonicalize(model)
    model.validate()
    return model


# --- treemap geometry -----------------------------------------------------------


def check_treemap_layout(layout: TreemapLayout, tolerance: float = 0.005) -> None:
    """Assert proportionality, containment, and pairwise non-overlap."""
    bounds = layout.bounds
    total_area = bounds.area
    total_weight = sum(max(c.file.size, 1) for c in layout.cells)
    eps = 1e-6 * max(bounds.w, bounds.h)
    for cell in layout.cells:
        r = cell.rect
        assert r.w >= -eps and r.h >= -eps, f"negative cell size for {cell.file.path}"
        assert r.x >= bounds.x - eps and r.y >= bounds.y - eps, "cell outside bounds"
        assert r.x + r.w <= bounds.x + bounds.w + eps, "cell overflows right edge"
        assert r.y + r.h <= bounds.y + bounds.h + eps, "cell overflows bottom edge"
        share = r.area / total_area
        want = max(cell.file.size, 1) / total_weight
        assert abs(share - want) <= tolerance, (
            f"{cell.file.path}: area share {share:.6f} vs size share {want:.6f}"
        )
    cells = layout.cells
    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            a, b = cells[i].rect, cells[j].rect
            overlap_w = min(a.x + a.w, b.x + b.w) - max(a.x, b.x)
            overlap_h = min(a.y + a.h, b.y + b.h) - max(a.y, b.y)
            assert overlap_w <= eps or overlap_h <= eps, (
                f"cells {cells[i].file.path} and {cells[j].file.path} overlap"
            )
