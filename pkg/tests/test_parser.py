from __future__ import annotations

import pytest

from javamap import syntax as ast
from javamap.lexer import TokenKind, tokenize
from javamap.parser import ParseError, parse_unit
from javamap.syntax import TypeKind, dump_tree


def parse(source: str, file_id: str = "t.java") -> ast.CompilationUnit:
    return parse_unit(tokenize(source, file_id), file_id)


def test_minimal_unit():
    unit = parse("package p; class A {}")
    assert unit.package_name == "p"
    assert unit.imports == []
    assert len(unit.types) == 1
    decl = unit.types[0]
    assert (decl.name, decl.kind) == ("A", TypeKind.CLASS)
    assert decl.fields == [] and decl.methods == []


def test_extends_implements_members():
    unit = parse("class B extends A implements I, J { int f; void m(){} }")
    decl = unit.types[0]
    assert decl.superclass_name == "A"
    assert decl.interface_names == ["I", "J"]
    assert len(decl.fields) == 1 and decl.fields[0].names == ["f"]
    assert len(decl.methods) == 1 and decl.methods[0].name == "m"
    assert decl.methods[0].return_type == "void"


def test_if_return_tree_shape():
    unit = parse("class C { void m() { if (x) return; } }")
    body = unit.types[0].methods[0].body
    assert isinstance(body, ast.Block) and len(body.stmts) == 1
    node = body.stmts[0]
    assert isinstance(node, ast.If)
    assert isinstance(node.cond, ast.Name) and node.cond.identifier == "x"
    assert isinstance(node.then_branch, ast.Return) and node.then_branch.value is None
    assert node.else_branch is None


def test_constructor_and_abstract_method():
    unit = parse(
        "class K { K() { } abstract int f(); }"
    )
    ctor, meth = unit.types[0].methods
    assert ctor.is_constructor and ctor.return_type is None
    assert meth.body is None and meth.return_type == "int"
    assert "abstract" in meth.modifiers


def test_interface_extends_goes_to_interface_names():
    unit = parse("interface I extends J, K { void m(); }")
    decl = unit.types[0]
    assert decl.kind is TypeKind.INTERFACE
    assert decl.superclass_name is None
    assert decl.interface_names == ["J", "K"]
    assert decl.methods[0].body is None


def test_imports_and_on_demand():
    unit = parse("package p; import a.b.C; import a.b.*; class X {}")
    assert [(i.name, i.on_demand) for i in unit.imports] == [("a.b.C", False), ("a.b", True)]
    assert unit.imports[0].package_name == "a.b"
    assert unit.imports[1].package_name == "a.b"


def test_field_with_multiple_declarators():
    unit = parse("class F { int a = 1, b, c = 2; }")
    fld = unit.types[0].fields[0]
    assert fld.names == ["a", "b", "c"]
    assert fld.initializers[0] is not None
    assert fld.initializers[1] is None
    assert fld.initializers[2] is not None


def test_expression_shapes():
    unit = parse(
        "class E { void m() { x = a + b * c; y = (Widget) maker.get(1)[2]; "
        "z = cond ? u : v; n = new int[3]; w = new a.b.C(p, q); t = -i++; } }"
    )
    stmts = unit.types[0].methods[0].body.stmts
    plus = stmts[0].expr.value
    assert isinstance(plus, ast.Binary) and plus.op == "+"
    assert isinstance(plus.right, ast.Binary) and plus.right.op == "*"
    cast = stmts[1].expr.value
    assert isinstance(cast, ast.Cast) and cast.type_name == "Widget"
    assert isinstance(cast.operand, ast.ArrayAccess)
    assert isinstance(stmts[2].expr.value, ast.Ternary)
    arr = stmts[3].expr.value
    assert isinstance(arr, ast.New) and arr.args is None and len(arr.dims) == 1
    ctor = stmts[4].expr.value
    assert isinstance(ctor, ast.New) and ctor.type_name == "a.b.C" and len(ctor.args) == 2
    neg = stmts[5].expr.value
    assert isinstance(neg, ast.Unary) and neg.op == "-" and neg.prefix
    assert isinstance(neg.operand, ast.Unary) and not neg.operand.prefix


def test_instanceof_and_shortcircuit():
    unit = parse("class S { boolean m() { return a instanceof p.Q && b || !c; } }")
    expr = unit.types[0].methods[0].body.stmts[0].value
    assert isinstance(expr, ast.Binary) and expr.op == "||"
    assert isinstance(expr.left, ast.Binary) and expr.left.op == "&&"
    inst = expr.left.left
    assert isinstance(inst, ast.Binary) and inst.op == "instanceof"
    assert isinstance(inst.right, ast.Name) and inst.right.identifier == "p.Q"


def test_parse_error_position_and_expected():
    with pytest.raises(ParseError) as err:
        parse("class A { void m() { int; } }")
    assert (err.value.line, err.value.col) == (1, 22)
    assert err.value.found == "'int'"
    assert err.value.expected
    assert "expected" in str(err.value) and "t.java:1:22" in str(err.value)


def test_nested_type_rejected():
    with pytest.raises(ParseError):
        parse("class A { class B {} }")


def test_statement_expression_restriction():
    with pytest.raises(ParseError):
        parse("class A { void m() { a + b; } }")


def test_determinism_identical_trees():
    source = "package p; class A { int x; void m() { for (int i = 0; i < 3; i++) x += i; } }"
    assert parse(source) == parse(source)


def _walk_with_spans(stmt: ast.Stmt):
    yield stmt.span
    for child in ast.stmt_substatements(stmt):
        for span in _walk_with_spans(child):
            yield span


def _assert_nested(parent_span, child_span):
    assert parent_span[0] <= child_span[0] <= child_span[1] <= parent_span[1]


def _check_spans(stmt: ast.Stmt):
    for child in ast.stmt_substatements(stmt):
        _assert_nested(stmt.span, child.span)
        _check_spans(child)
    for expr in ast.stmt_expressions(stmt):
        _assert_nested(stmt.span, expr.span)
        _check_expr_spans(expr)


def _check_expr_spans(expr: ast.Expr):
    for child in ast.expr_subexpressions(expr):
        _assert_nested(expr.span, child.span)
        _check_expr_spans(child)


def test_spans_nest_recursively(printshop_units):
    for unit in printshop_units:
        for decl in unit.types:
            for method in decl.methods:
                _assert_nested(decl.span, method.span)
                if method.body is not None:
                    _assert_nested(method.span, method.body.span)
                    _check_spans(method.body)


def test_type_decl_count_matches_keyword_tokens(printshop_sources, printshop_units):
    token_count = 0
    for text in printshop_sources.values():
        token_count += sum(
            1
            for t in tokenize(text, "f")
            if t.kind is TokenKind.KEYWORD and t.lexeme in ("class", "interface")
        )
    tree_count = sum(len(u.types) for u in printshop_units)
    assert tree_count == token_count


def test_shortcircuit_tokens_match_binary_nodes(printshop_sources, printshop_units):
    token_count = 0
    for text in printshop_sources.values():
        token_count += sum(
            1
            for t in tokenize(text, "f")
            if t.kind is TokenKind.OPERATOR and t.lexeme in ("&&", "||")
        )
    node_count = 0
    for unit in printshop_units:
        for decl in unit.types:
            for expr in ast.type_expressions(decl):
                if isinstance(expr, ast.Binary) and expr.op in ("&&", "||"):
                    node_count += 1
    assert node_count == token_count


def test_dump_tree_is_stable(printshop_units):
    unit = printshop_units[0]
    first = dump_tree(unit)
    assert first == dump_tree(unit)
    assert first.startswith("CompilationUnit ")
    assert first.endswith("\n")
