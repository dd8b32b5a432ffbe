"""Application/package/class semantic model assembly and name resolution.

The model is a three-tier containment forest (one application, its packages,
their classes) plus relationship edges (contains, extends, implements,
imports). Entity ids are derived deterministically from kind and qualified
name, so rebuilding from identical inputs yields an identical model.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum

from . import syntax as ast
from .scanner import FileKind, FileRecord, ProjectInventory
from .syntax import CompilationUnit, TypeDecl, TypeKind


class PackageOrigin(str, Enum):
    PROJECT_FILE = "project_file"
    LIBRARY = "library"


class EdgeKind(str, Enum):
    CONTAINS = "contains"
    EXTENDS = "extends"
    IMPLEMENTS = "implements"
    IMPORTS = "imports"


class ModelError(Exception):
    pass


class DuplicateTypeError(ModelError):
    def __init__(self, qualified_name: str, first_file: str, second_file: str) -> None:
        super().__init__(
            f"duplicate type {qualified_name}: declared in {first_file} and {second_file}"
        )
        self.qualified_name = qualified_name
        self.first_file = first_file
        self.second_file = second_file


class InheritanceCycleError(ModelError):
    def __init__(self, members: list[str]) -> None:
        super().__init__("inheritance cycle: " + " -> ".join(members))
        self.members = members


def application_id(name: str) -> str:
    return f"app:{name}"


def package_id(name: str) -> str:
    return f"pkg:{name}"


def class_id(qualified_name: str) -> str:
    return f"cls:{qualified_name}"


@dataclass
class ApplicationNode:
    name: str
    artifacts: list[FileRecord] = field(default_factory=list)
    components: list[FileRecord] = field(default_factory=list)

    @property
    def id(self) -> str:
        return application_id(self.name)


@dataclass
class PackageNode:
    name: str  # "" is the default package, rendered as "(default)"
    origin: PackageOrigin
    member_class_ids: list[str] = field(default_factory=list)
    total_source_bytes: int = 0

    @property
    def id(self) -> str:
        return package_id(self.name)


@dataclass
class ClassNode:
    qualified_name: str
    kind: TypeKind
    declaration_count: int = 0
    method_count: int = 0
    statement_count: int = 0
    expression_count: int = 0
    file_id: str = ""  # empty for unresolved placeholders
    resolved: bool = True

    @property
    def id(self) -> str:
        return class_id(self.qualified_name)


@dataclass(frozen=True)
class Edge:
    kind: EdgeKind
    from_id: str
    to_id: str


@dataclass
class SemanticModel:
    application: ApplicationNode
    packages: list[PackageNode] = field(default_factory=list)
    classes: list[ClassNode] = field(default_factory=list)
    relationships: list[Edge] = field(default_factory=list)

    def package_by_id(self) -> dict[str, PackageNode]:
        return {p.id: p for p in self.packages}

    def class_by_id(self) -> dict[str, ClassNode]:
        return {c.id: c for c in self.classes}

    def edges(self, kind: EdgeKind) -> list[Edge]:
        return [e for e in self.relationships if e.kind is kind]

    def extends_parent(self) -> dict[str, str]:
        """Child class id -> parent class id over Extends edges."""
        return {e.from_id: e.to_id for e in self.edges(EdgeKind.EXTENDS)}

    def validate(self) -> None:
        """Check referential integrity and the single-inheritance forest shape."""
        pkg_ids = {p.id for p in self.packages}
        cls_ids = {c.id for c in self.classes}
        if len(cls_ids) != len(self.classes):
            raise ModelError("duplicate class ids in model")
        if len(pkg_ids) != len(self.packages):
            raise ModelError("duplicate package ids in model")
        owned: set[str] = set()
        for pkg in self.packages:
            for cid in pkg.member_class_ids:
                if cid not in cls_ids:
                    raise ModelError(f"package {pkg.id} references unknown class {cid}")
                if cid in owned:
                    raise ModelError(f"class {cid} owned by more than one package")
                owned.add(cid)
        if owned != cls_ids:
            raise ModelError("every class must belong to exactly one package")
        extends_out: dict[str, int] = {}
        for edge in self.relationships:
            if edge.kind is EdgeKind.CONTAINS:
                ok = edge.from_id in pkg_ids and edge.to_id in cls_ids
            elif edge.kind is EdgeKind.IMPORTS:
                ok = edge.from_id in pkg_ids and edge.to_id in pkg_ids
            else:
                ok = edge.from_id in cls_ids and edge.to_id in cls_ids
            if not ok:
                raise ModelError(f"edge {edge} references unknown entity")
            if edge.kind is EdgeKind.EXTENDS:
                extends_out[edge.from_id] = extends_out.get(edge.from_id, 0) + 1
        if any(n > 1 for n in extends_out.values()):
            raise ModelError("a class extends more than one superclass")
        _check_acyclic(self.extends_parent())


def _check_acyclic(parent: dict[str, str]) -> None:
    state: dict[str, int] = {}  # 1 = on stack, 2 = done
    for node in parent:
        if state.get(node):
            continue
        trail = []
        cur: str | None = node
        while cur is not None and state.get(cur) != 2:
            if state.get(cur) == 1:
                i = trail.index(cur)
                members = [c.removeprefix("cls:") for c in trail[i:]]
                raise InheritanceCycleError(members)
            state[cur] = 1
            trail.append(cur)
            cur = parent.get(cur)
        for seen in trail:
            state[seen] = 2


def _canonicalize(model: SemanticModel) -> SemanticModel:
    model.packages.sort(key=lambda p: p.name)
    model.classes.sort(key=lambda c: c.qualified_name)
    for pkg in model.packages:
        pkg.member_class_ids = sorted(set(pkg.member_class_ids))
    model.relationships = sorted(
        set(model.relationships), key=lambda e: (e.kind.value, e.from_id, e.to_id)
    )
    return model


def _qualified(package_name: str, simple_name: str) -> str:
    return f"{package_name}.{simple_name}" if package_name else simple_name


def _tally(decl: TypeDecl) -> tuple[int, int, int, int]:
    declarations = sum(len(f.names) for f in decl.fields)
    statements = 0
    for stmt in ast.type_statements(decl):
        if isinstance(stmt, (ast.Block, ast.Empty)):
            continue
        statements += 1
        if isinstance(stmt, ast.LocalDecl):
            declarations += len(stmt.names)
    expressions = sum(1 for _ in ast.type_expressions(decl))
    return declarations, len(decl.methods), statements, expressions


def build_model(inventory: ProjectInventory, units: list[CompilationUnit]) -> SemanticModel:
    """Assemble entities, containment, and import edges from parsed units.

    Raises DuplicateTypeError when two declarations share a qualified name.
    Inheritance edges are added by resolve_inheritance; build_semantic_model
    runs both steps.
    """
    root_name = os.path.basename(os.path.abspath(inventory.root))
    app = ApplicationNode(
        name=root_name or "application",
        artifacts=list(inventory.files),
        components=inventory.components,
    )
    model = SemanticModel(application=app)
    sizes = {f.path: f.size for f in inventory.files if f.kind is FileKind.JAVA_SOURCE}

    packages: dict[str, PackageNode] = {}

    def ensure_package(name: str, origin: PackageOrigin) -> PackageNode:
        pkg = packages.get(name)
        if pkg is None:
            pkg = PackageNode(name=name, origin=origin)
            packages[name] = pkg
        elif origin is PackageOrigin.PROJECT_FILE:
            pkg.origin = origin
        return pkg

    declared_files: dict[str, str] = {}  # qualified class name -> file id
    for unit in units:
        if unit.file_id not in sizes:
            raise ModelError(f"unit {unit.file_id} is not a Java source entry of the inventory")
        pkg_name = unit.package_name or ""
        pkg = ensure_package(pkg_name, PackageOrigin.PROJECT_FILE)
        pkg.total_source_bytes += sizes[unit.file_id]
        for decl in unit.types:
            qualified = _qualified(pkg_name, decl.name)
            if qualified in declared_files:
                raise DuplicateTypeError(qualified, declared_files[qualified], unit.file_id)
            declared_files[qualified] = unit.file_id
            declarations, methods, statements, expressions = _tally(decl)
            model.classes.append(
                ClassNode(
                    qualified_name=qualified,
                    kind=decl.kind,
                    declaration_count=declarations,
                    method_count=methods,
                    statement_count=statements,
                    expression_count=expressions,
                    file_id=unit.file_id,
                )
            )
            pkg.member_class_ids.append(class_id(qualified))
            model.relationships.append(
                Edge(EdgeKind.CONTAINS, pkg.id, class_id(qualified))
            )

    for unit in units:
        from_pkg = unit.package_name or ""
        for imp in unit.imports:
            to_pkg = imp.package_name
            if not to_pkg or to_pkg == from_pkg:
                continue
            ensure_package(to_pkg, PackageOrigin.LIBRARY)
            model.relationships.append(
                Edge(EdgeKind.IMPORTS, package_id(from_pkg), package_id(to_pkg))
            )

    model.packages = list(packages.values())
    _canonicalize(model)
    model.validate()
    return model


def resolve_inheritance(model: SemanticModel, units: list[CompilationUnit]) -> SemanticModel:
    """Resolve superclass/interface names to class nodes and add edges.

    Lookup order per name: already-qualified > same package > explicit
    imports > on-demand imports (declared classes only) > a same-package
    unresolved placeholder. Placeholders for external supertypes become
    unresolved ClassNodes inside their (library) package. Raises
    InheritanceCycleError when the extends relation has a cycle.
    """
    declared = {c.qualified_name for c in model.classes if c.resolved}
    classes = {c.qualified_name: c for c in model.classes}
    packages = {p.name: p for p in model.packages}
    edges = set(model.relationships)

    def ensure_placeholder(qualified: str, kind: TypeKind) -> ClassNode:
        node = classes.get(qualified)
        if node is not None:
            return node
        node = ClassNode(qualified_name=qualified, kind=kind, resolved=False)
        classes[qualified] = node
        model.classes.append(node)
        pkg_name = qualified.rpartition(".")[0]
        pkg = packages.get(pkg_name)
        if pkg is None:
            pkg = PackageNode(name=pkg_name, origin=PackageOrigin.LIBRARY)
            packages[pkg_name] = pkg
            model.packages.append(pkg)
        pkg.member_class_ids.append(node.id)
        edges.add(Edge(EdgeKind.CONTAINS, pkg.id, node.id))
        return node

    def resolve_name(name: str, unit: CompilationUnit) -> str:
        if "." in name:
            return name
        pkg_name = unit.package_name or ""
        same_package = _qualified(pkg_name, name)
        if same_package in declared:
            return same_package
        for imp in unit.imports:
            if not imp.on_demand and imp.name.rpartition(".")[2] == name:
                return imp.name
        candidates = sorted(
            f"{imp.name}.{name}"
            for imp in unit.imports
            if imp.on_demand and f"{imp.name}.{name}" in declared
        )
        if candidates:
            return candidates[0]
        return same_package

    for unit in units:
        pkg_name = unit.package_name or ""
        for decl in unit.types:
            child = classes[_qualified(pkg_name, decl.name)]
            if decl.superclass_name is not None:
                target = resolve_name(decl.superclass_name, unit)
                parent = ensure_placeholder(target, TypeKind.CLASS)
                edges.add(Edge(EdgeKind.EXTENDS, child.id, parent.id))
            for iface_name in decl.interface_names:
                target = resolve_name(iface_name, unit)
                iface = ensure_placeholder(target, TypeKind.INTERFACE)
                edges.add(Edge(EdgeKind.IMPLEMENTS, child.id, iface.id))

    model.relationships = list(edges)
    _canonicalize(model)
    model.validate()
    return model


def build_semantic_model(
    inventory: ProjectInventory, units: list[CompilationUnit]
) -> SemanticModel:
    """build_model plus resolve_inheritance: the full model in one call."""
    return resolve_inheritance(build_model(inventory, units), units)
