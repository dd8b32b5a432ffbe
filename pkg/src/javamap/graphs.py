"""DOT emitters for the package import graph and the class inheritance graph.

Both emitters are deterministic: nodes and edges are written in sorted
order, so equal models produce byte-identical documents.
"""

from __future__ import annotations

from .model import EdgeKind, SemanticModel

# Cluster accents beyond the three file-map colors fixed by the treemap.
PALETTE = [
    "#4c78a8", "#f58518", "#e45756", "#72b7b2", "#54a24b", "#eeca3b",
    "#b279a2", "#ff9da6", "#9d755d", "#bab0ac", "#6b8e23", "#3b5998",
]


def _display_package(name: str) -> str:
    return name if name else "(default)"


def _quote(name: str) -> str:
    return '"' + name.replace('"', '\\"') + '"'


def emit_package_graph(model: SemanticModel) -> str:
    """One node per package (library packages dashed), one edge per import."""
    lines = ["digraph packages {", "  rankdir=LR;", "  node [shape=box];"]
    for pkg in sorted(model.packages, key=lambda p: p.name):
        attrs = ' [style=dashed]' if pkg.origin.value == "library" else ""
        lines.append(f"  {_quote(_display_package(pkg.name))}{attrs};")
    pkg_names = {p.id: _display_package(p.name) for p in model.packages}
    for edge in sorted(model.edges(EdgeKind.IMPORTS), key=lambda e: (e.from_id, e.to_id)):
        lines.append(f"  {_quote(pkg_names[edge.from_id])} -> {_quote(pkg_names[edge.to_id])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_class_graph(model: SemanticModel) -> str:
    """Classes clustered by package; extends edges solid, implements dotted.

    Unresolved placeholder classes are drawn dashed and gray.
    """
    lines = ["digraph classes {", "  node [shape=box];"]
    classes = model.class_by_id()
    for index, pkg in enumerate(sorted(model.packages, key=lambda p: p.name)):
        color = PALETTE[index % len(PALETTE)]
        lines.append(f"  subgraph cluster_{index} {{")
        lines.append(f"    label={_quote(_display_package(pkg.name))};")
        lines.append(f"    color={_quote(color)};")
        for cid in pkg.member_class_ids:
            cls = classes[cid]
            simple = cls.qualified_name.rpartition(".")[2]
            attrs = [f"label={_quote(simple)}"]
            if not cls.resolved:
                attrs.extend(["style=dashed", "color=gray"])
            lines.append(f"    {_quote(cls.qualified_name)} [{', '.join(attrs)}];")
        lines.append("  }")
    inherit = [
        e for e in model.relationships
        if e.kind in (EdgeKind.EXTENDS, EdgeKind.IMPLEMENTS)
    ]
    for edge in sorted(inherit, key=lambda e: (e.kind.value, e.from_id, e.to_id)):
        from_name = classes[edge.from_id].qualified_name
        to_name = classes[edge.to_id].qualified_name
        attrs = " [style=dotted]" if edge.kind is EdgeKind.IMPLEMENTS else ""
        lines.append(f"  {_quote(from_name)} -> {_quote(to_name)}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"
