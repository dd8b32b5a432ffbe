from __future__ import annotations

import pytest

from javamap.dotcheck import DotSyntaxError, check_dot
from javamap.graphs import emit_class_graph, emit_package_graph
from javamap.lexer import tokenize
from javamap.model import ApplicationNode, EdgeKind, SemanticModel, build_semantic_model
from javamap.parser import parse_unit
from javamap.scanner import FileKind, FileRecord, ProjectInventory


def model_of(*sources: tuple[str, str]) -> SemanticModel:
    files = sorted(
        (
            FileRecord(path=f, size=len(s.encode()), kind=FileKind.JAVA_SOURCE)
            for f, s in sources
        ),
        key=lambda r: r.path,
    )
    inventory = ProjectInventory(root="/proj", files=files, scanned_at="t")
    units = [parse_unit(tokenize(s, f), f) for f, s in sources]
    return build_semantic_model(inventory, units)


def test_empty_model_graphs_are_valid():
    model = SemanticModel(application=ApplicationNode(name="empty"))
    for emit in (emit_package_graph, emit_class_graph):
        stats = check_dot(emit(model))
        assert (stats.node_count, stats.edge_count) == (0, 0)


def test_package_graph_nodes_and_import_edge():
    model = model_of(
        ("P.java", "package p; import q.R; class P {}"),
        ("R.java", "package q; class R {}"),
    )
    text = emit_package_graph(model)
    stats = check_dot(text)
    assert stats.node_count == 2
    assert stats.edge_count == 1
    assert '"p" -> "q";' in text
    assert text == emit_package_graph(model)


def test_library_package_node_is_dashed():
    model = model_of(("P.java", "package p; import java.io.File; class P {}"))
    text = emit_package_graph(model)
    assert '"java.io" [style=dashed];' in text


def test_default_package_label():
    model = model_of(("A.java", "class A {}"))
    assert '"(default)";' in emit_package_graph(model)


def test_class_graph_single_class_in_cluster():
    model = model_of(("A.java", "package p; class A {}"))
    text = emit_class_graph(model)
    stats = check_dot(text)
    assert stats.node_count == 1
    assert "subgraph cluster_0 {" in text
    assert 'label="p";' in text


def test_class_graph_edge_styles():
    model = model_of(
        ("A.java", "package p; class A {}"),
        ("B.java", "package p; class B extends A {}"),
        ("I.java", "package p; interface I {}"),
        ("C.java", "package p; class C implements I {}"),
    )
    text = emit_class_graph(model)
    stats = check_dot(text)
    assert stats.node_count == len(model.classes)
    assert stats.edge_count == 2
    assert '"cls:p.B"' not in text  # node names are qualified names, not ids
    assert '"p.B" -> "p.A";' in text
    assert '"p.C" -> "p.I" [style=dotted];' in text


def test_placeholder_node_styled_unresolved():
    model = model_of(("C.java", "package q; class C extends java.util.Vector {}"))
    text = emit_class_graph(model)
    assert '"java.util.Vector" [label="Vector", style=dashed, color=gray];' in text


def test_fixture_graph_counts_match_model(printshop_model):
    package_stats = check_dot(emit_package_graph(printshop_model))
    assert package_stats.node_count == len(printshop_model.packages)
    assert package_stats.edge_count == len(printshop_model.edges(EdgeKind.IMPORTS))
    class_stats = check_dot(emit_class_graph(printshop_model))
    assert class_stats.node_count == len(printshop_model.classes)
    inherit = len(printshop_model.edges(EdgeKind.EXTENDS)) + len(
        printshop_model.edges(EdgeKind.IMPLEMENTS)
    )
    assert class_stats.edge_count == inherit


@pytest.mark.parametrize(
    "text",
    [
        "graph g { }",
        "digraph g {",
        'digraph g { "a" -> ; }',
        'digraph g { "a" "b"; }',
        'digraph g { "a" [x]; }',
        'digraph g { } trailing',
    ],
)
def test_dotcheck_rejects_malformed(text):
    with pytest.raises(DotSyntaxError):
        check_dot(text)


def test_dotcheck_counts():
    stats = check_dot(
        'digraph g { rankdir=LR; node [shape=box]; "a"; "b" [style=dashed]; '
        'subgraph cluster_0 { label="x"; "c"; } "a" -> "b"; "b" -> "c" [style=dotted]; }'
    )
    assert (stats.node_count, stats.edge_count) == (3, 2)
