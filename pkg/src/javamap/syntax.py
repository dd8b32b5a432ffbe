"""Syntax tree node types for the Java subset, plus traversal helpers.

Every statement and expression carries a byte-range span (start, end),
half-open, nested within its parent's span. The accepted grammar is
documented in docs/grammar.md.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional

Span = tuple[int, int]


class TypeKind(str, Enum):
    CLASS = "class"
    INTERFACE = "interface"


class Expr:
    """Base class for expression nodes."""

    span: Span


class Stmt:
    """Base class for statement nodes."""

    span: Span


@dataclass
class Literal(Expr):
    kind: str  # int, float, string, char, bool, null
    text: str
    span: Span = (0, 0)


@dataclass
class Name(Expr):
    identifier: str
    span: Span = (0, 0)


@dataclass
class FieldAccess(Expr):
    target: Expr
    name: str
    span: Span = (0, 0)


@dataclass
class Call(Expr):
    callee: Expr
    args: list[Expr] = field(default_factory=list)
    span: Span = (0, 0)


@dataclass
class New(Expr):
    type_name: str
    args: Optional[list[Expr]] = None  # None for array creation
    dims: list[Optional[Expr]] = field(default_factory=list)
    span: Span = (0, 0)


@dataclass
class Unary(Expr):
    op: str
    operand: Expr = None  # type: ignore[assignment]
    prefix: bool = True
    span: Span = (0, 0)


@dataclass
class Binary(Expr):
    op: str
    left: Expr = None  # type: ignore[assignment]
    right: Expr = None  # type: ignore[assignment]
    span: Span = (0, 0)


@dataclass
class Ternary(Expr):
    cond: Expr
    if_true: Expr
    if_false: Expr
    span: Span = (0, 0)


@dataclass
class Assign(Expr):
    target: Expr
    op: str
    value: Expr
    span: Span = (0, 0)


@dataclass
class Cast(Expr):
    type_name: str
    operand: Expr
    span: Span = (0, 0)


@dataclass
class ArrayAccess(Expr):
    array: Expr
    index: Expr
    span: Span = (0, 0)


@dataclass
class Block(Stmt):
    stmts: list[Stmt] = field(default_factory=list)
    span: Span = (0, 0)


@dataclass
class If(Stmt):
    cond: Expr
    then_branch: Stmt
    else_branch: Optional[Stmt] = None
    span: Span = (0, 0)


@dataclass
class While(Stmt):
    cond: Expr
    body: Stmt = None  # type: ignore[assignment]
    span: Span = (0, 0)


@dataclass
class DoWhile(Stmt):
    body: Stmt
    cond: Expr = None  # type: ignore[assignment]
    span: Span = (0, 0)


@dataclass
class For(Stmt):
    init: list[Stmt] = field(default_factory=list)  # LocalDecl or ExprStmt items
    cond: Optional[Expr] = None
    update: list[Expr] = field(default_factory=list)
    body: Stmt = None  # type: ignore[assignment]
    span: Span = (0, 0)


@dataclass
class CaseGroup:
    labels: list[Expr]
    body: list[Stmt]


@dataclass
class Switch(Stmt):
    scrutinee: Expr
    groups: list[CaseGroup] = field(default_factory=list)
    default_body: Optional[list[Stmt]] = None
    span: Span = (0, 0)


@dataclass
class CatchClause:
    type_name: str
    name: str
    body: Block


@dataclass
class Try(Stmt):
    body: Block
    catches: list[CatchClause] = field(default_factory=list)
    finally_body: Optional[Block] = None
    span: Span = (0, 0)


@dataclass
class Return(Stmt):
    value: Optional[Expr] = None
    span: Span = (0, 0)


@dataclass
class Throw(Stmt):
    value: Expr = None  # type: ignore[assignment]
    span: Span = (0, 0)


@dataclass
class ExprStmt(Stmt):
    expr: Expr
    span: Span = (0, 0)


@dataclass
class LocalDecl(Stmt):
    type_name: str
    names: list[str] = field(default_factory=list)
    initializers: list[Optional[Expr]] = field(default_factory=list)
    modifiers: frozenset[str] = frozenset()
    span: Span = (0, 0)


@dataclass
class Break(Stmt):
    span: Span = (0, 0)


@dataclass
class Continue(Stmt):
    span: Span = (0, 0)


@dataclass
class Empty(Stmt):
    span: Span = (0, 0)


@dataclass
class FieldDecl:
    type_name: str
    names: list[str]
    initializers: list[Optional[Expr]]
    modifiers: frozenset[str] = frozenset()
    span: Span = (0, 0)


@dataclass
class MethodDecl:
    name: str
    params: list[tuple[str, str]]  # (type name, parameter name)
    return_type: Optional[str]  # None marks a constructor
    body: Optional[Block]  # None for abstract/interface methods
    modifiers: frozenset[str] = frozenset()
    span: Span = (0, 0)

    @property
    def is_constructor(self) -> bool:
        return self.return_type is None

    def signature(self) -> str:
        return f"{self.name}({','.join(t for t, _ in self.params)})"


@dataclass
class TypeDecl:
    name: str
    kind: TypeKind
    superclass_name: Optional[str] = None
    interface_names: list[str] = field(default_factory=list)
    fields: list[FieldDecl] = field(default_factory=list)
    methods: list[MethodDecl] = field(default_factory=list)
    modifiers: frozenset[str] = frozenset()
    span: Span = (0, 0)


@dataclass
class ImportDecl:
    name: str  # dotted name, without the trailing ".*"
    on_demand: bool = False

    @property
    def package_name(self) -> str:
        """Package a single-type import refers to; the name itself when on-demand."""
        if self.on_demand:
            return self.name
        return self.name.rpartition(".")[0]


@dataclass
class CompilationUnit:
    file_id: str
    package_name: Optional[str] = None
    imports: list[ImportDecl] = field(default_factory=list)
    types: list[TypeDecl] = field(default_factory=list)


# --- traversal -------------------------------------------------------------


def stmt_substatements(stmt: Stmt) -> list[Stmt]:
    """Direct statement children of a statement node."""
    if isinstance(stmt, Block):
        return list(stmt.stmts)
    if isinstance(stmt, If):
        out: list[Stmt] = [stmt.then_branch]
        if stmt.else_branch is not None:
            out.append(stmt.else_branch)
        return out
    if isinstance(stmt, (While, DoWhile)):
        return [stmt.body]
    if isinstance(stmt, For):
        return list(stmt.init) + [stmt.body]
    if isinstance(stmt, Switch):
        out = []
        for group in stmt.groups:
            out.extend(group.body)
        if stmt.default_body is not None:
            out.extend(stmt.default_body)
        return out
    if isinstance(stmt, Try):
        out = [stmt.body]
        out.extend(c.body for c in stmt.catches)
        if stmt.finally_body is not None:
            out.append(stmt.finally_body)
        return out
    return []


def stmt_expressions(stmt: Stmt) -> list[Expr]:
    """Expressions attached directly to a statement node."""
    if isinstance(stmt, If):
        return [stmt.cond]
    if isinstance(stmt, (While, DoWhile)):
        return [stmt.cond]
    if isinstance(stmt, For):
        out = list(stmt.update)
        if stmt.cond is not None:
            out.insert(0, stmt.cond)
        return out
    if isinstance(stmt, Switch):
        out = [stmt.scrutinee]
        for group in stmt.groups:
            out.extend(group.labels)
        return out
    if isinstance(stmt, Return):
        return [stmt.value] if stmt.value is not None else []
    if isinstance(stmt, Throw):
        return [stmt.value]
    if isinstance(stmt, ExprStmt):
        return [stmt.expr]
    if isinstance(stmt, LocalDecl):
        return [e for e in stmt.initializers if e is not None]
    return []


def expr_subexpressions(expr: Expr) -> list[Expr]:
    """Direct expression children of an expression node."""
    if isinstance(expr, FieldAccess):
        return [expr.target]
    if isinstance(expr, Call):
        return [expr.callee] + list(expr.args)
    if isinstance(expr, New):
        out = list(expr.args) if expr.args is not None else []
        out.extend(d for d in expr.dims if d is not None)
        return out
    if isinstance(expr, Unary):
        return [expr.operand]
    if isinstance(expr, Binary):
        return [expr.left, expr.right]
    if isinstance(expr, Ternary):
        return [expr.cond, expr.if_true, expr.if_false]
    if isinstance(expr, Assign):
        return [expr.target, expr.value]
    if isinstance(expr, Cast):
        return [expr.operand]
    if isinstance(expr, ArrayAccess):
        return [expr.array, expr.index]
    return []


def iter_stmts(root: Stmt) -> Iterator[Stmt]:
    """All statement nodes in the subtree rooted at root, root included."""
    yield root
    for child in stmt_substatements(root):
        yield from iter_stmts(child)


def iter_exprs(root: Expr) -> Iterator[Expr]:
    """All expression nodes in the subtree rooted at root, root included."""
    yield root
    for child in expr_subexpressions(root):
        yield from iter_exprs(child)


def stmt_all_exprs(root: Stmt) -> Iterator[Expr]:
    for stmt in iter_stmts(root):
        for expr in stmt_expressions(stmt):
            yield from iter_exprs(expr)


def type_statements(decl: TypeDecl) -> Iterator[Stmt]:
    for method in decl.methods:
        if method.body is not None:
            yield from iter_stmts(method.body)


def type_expressions(decl: TypeDecl) -> Iterator[Expr]:
    for fld in decl.fields:
        for init in fld.initializers:
            if init is not None:
                yield from iter_exprs(init)
    for method in decl.methods:
        if method.body is not None:
            yield from stmt_all_exprs(method.body)


# --- debug dump ------------------------------------------------------------


def dump_tree(unit: CompilationUnit) -> str:
    """Indented, line-oriented rendering of a compilation unit (stable)."""
    lines: list[str] = [f"CompilationUnit {unit.file_id}"]
    lines.append(f"  package {unit.package_name if unit.package_name is not None else '(none)'}")
    for imp in unit.imports:
        suffix = ".*" if imp.on_demand else ""
        lines.append(f"  import {imp.name}{suffix}")
    for decl in unit.types:
        head = f"  {decl.kind.value} {decl.name}"
        if decl.superclass_name:
            head += f" extends {decl.superclass_name}"
        if decl.interface_names:
            head += f" implements {','.join(decl.interface_names)}"
        lines.append(head)
        for fld in decl.fields:
            lines.append(f"    field {fld.type_name} {','.join(fld.names)}")
        for method in decl.methods:
            ret = "" if method.is_constructor else f"{method.return_type} "
            lines.append(f"    method {ret}{method.signature()}")
            if method.body is not None:
                _dump_stmt(method.body, lines, depth=3)
    return "\n".join(lines) + "\n"


def _dump_stmt(stmt: Stmt, lines: list[str], depth: int) -> None:
    pad = "  " * depth
    label = type(stmt).__name__
    extra = ""
    if isinstance(stmt, LocalDecl):
        extra = f" {stmt.type_name} {','.join(stmt.names)}"
    elif isinstance(stmt, (If, While, DoWhile)):
        extra = f" ({_dump_expr(stmt.cond)})"
    elif isinstance(stmt, ExprStmt):
        extra = f" {_dump_expr(stmt.expr)}"
    elif isinstance(stmt, Return) and stmt.value is not None:
        extra = f" {_dump_expr(stmt.value)}"
    lines.append(f"{pad}{label}{extra}")
    for child in stmt_substatements(stmt):
        _dump_stmt(child, lines, depth + 1)


def _dump_expr(expr: Expr) -> str:
    if isinstance(expr, Literal):
        return expr.text
    if isinstance(expr, Name):
        return expr.identifier
    if isinstance(expr, FieldAccess):
        return f"{_dump_expr(expr.target)}.{expr.name}"
    if isinstance(expr, Call):
        return f"{_dump_expr(expr.callee)}(...)" if expr.args else f"{_dump_expr(expr.callee)}()"
    if isinstance(expr, Binary):
        return f"{_dump_expr(expr.left)} {expr.op} {_dump_expr(expr.right)}"
    if isinstance(expr, Unary):
        return f"{expr.op}{_dump_expr(expr.operand)}" if expr.prefix else f"{_dump_expr(expr.operand)}{expr.op}"
    if isinstance(expr, Assign):
        return f"{_dump_expr(expr.target)} {expr.op} {_dump_expr(expr.value)}"
    return type(expr).__name__
