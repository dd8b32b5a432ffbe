"""Squarified treemap layout of a project inventory, and its SVG rendering.

The recursion follows the directory hierarchy: each directory becomes a
nested region sized by its subtree total, each file a leaf cell whose area
is proportional to its byte size. Zero-size files get a minimum weight of
one byte so every file stays visible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .scanner import FileKind, FileRecord, ProjectInventory
from .svg import escape, fmt

DEFAULT_COLOR_SCHEME: dict[FileKind, str] = {
    FileKind.JAVA_SOURCE: "blue",
    FileKind.COMPILED_CLASS: "orange",
    FileKind.IMAGE: "pink",
    FileKind.JAR_ARCHIVE: "green",
    FileKind.OTHER_ARTIFACT: "lightgray",
}


@dataclass(frozen=True)
class Rect:
    x: float
    y: float
    w: float
    h: float

    @property
    def area(self) -> float:
        return self.w * self.h


@dataclass
class TreemapCell:
    file: FileRecord
    rect: Rect
    color: str


@dataclass
class TreemapLayout:
    bounds: Rect
    cells: list[TreemapCell] = field(default_factory=list)


class _DirNode:
    def __init__(self) -> None:
        self.dirs: dict[str, _DirNode] = {}
        self.files: list[FileRecord] = []
        self.weight = 0

    def insert(self, parts: list[str], record: FileRecord) -> None:
        if len(parts) == 1:
            self.files.append(record)
        else:
            self.dirs.setdefault(parts[0], _DirNode()).insert(parts[1:], record)
        self.weight += max(record.size, 1)


def _worst_ratio(row: list[float], side: float) -> float:
    total = sum(row)
    if total <= 0 or side <= 0:
        return float("inf")
    s2 = side * side
    t2 = total * total
    return max(s2 * max(row) / t2, t2 / (s2 * min(row)))


def _squarify(areas: list[float], rect: Rect) -> list[Rect]:
    """Lay areas (descending) into rect; rects returned in the same order."""
    out: list[Rect] = []
    start = 0
    r = rect
    while start < len(areas):
        side = min(r.w, r.h)
        end = start + 1
        row = [areas[start]]
        while end < len(areas):
            candidate = row + [areas[end]]
            if _worst_ratio(candidate, side) <= _worst_ratio(row, side):
                row = candidate
                end += 1
            else:
                break
        last_row = end == len(areas)
        r = _lay_row(row, r, last_row, out)
        start = end
    return out


def _lay_row(row: list[float], r: Rect, last_row: bool, out: list[Rect]) -> Rect:
    total = sum(row)
    if r.w >= r.h:
        # Vertical strip on the left edge, cells stacked top to bottom.
        width = r.w if last_row else (total / r.h if r.h > 0 else 0.0)
        y = r.y
        for i, area in enumerate(row):
            height = (r.y + r.h) - y if i == len(row) - 1 else (area / width if width > 0 else 0.0)
            out.append(Rect(r.x, y, width, height))
            y += height
        return Rect(r.x + width, r.y, r.w - width, r.h)
    height = r.h if last_row else (total / r.w if r.w > 0 else 0.0)
    x = r.x
    for i, area in enumerate(row):
        width = (r.x + r.w) - x if i == len(row) - 1 else (area / height if height > 0 else 0.0)
        out.append(Rect(x, r.y, width, height))
        x += width
    return Rect(r.x, r.y + height, r.w, r.h - height)


def _layout_node(node: _DirNode, rect: Rect, scheme: dict[FileKind, str], cells: list[TreemapCell]) -> None:
    children: list[tuple[int, str, object]] = []
    for name, sub in node.dirs.items():
        children.append((sub.weight, f"d:{name}", sub))
    for record in node.files:
        children.append((max(record.size, 1), f"f:{record.path}", record))
    if not children:
        return
    children.sort(key=lambda item: (-item[0], item[1]))
    total = sum(weight for weight, _, _ in children)
    areas = [weight / total * rect.area for weight, _, _ in children]
    rects = _squarify(areas, rect)
    for (_, _, child), child_rect in zip(children, rects):
        if isinstance(child, _DirNode):
            _layout_node(child, child_rect, scheme, cells)
        else:
            assert isinstance(child, FileRecord)
            cells.append(TreemapCell(file=child, rect=child_rect, color=scheme[child.kind]))


def layout_treemap(
    inventory: ProjectInventory,
    bounds: Rect,
    scheme: dict[FileKind, str] | None = None,
) -> TreemapLayout:
    """Compute leaf cells for every inventory file inside bounds.

    Requires bounds with positive area. An empty inventory yields an empty
    layout (no error).
    """
    if bounds.w <= 0 or bounds.h <= 0:
        raise ValueError("treemap bounds must have positive area")
    scheme = dict(DEFAULT_COLOR_SCHEME, **(scheme or {}))
    root = _DirNode()
    for record in inventory.files:
        root.insert(record.path.split("/"), record)
    layout = TreemapLayout(bounds=bounds)
    _layout_node(root, bounds, scheme, layout.cells)
    return layout


def emit_treemap_svg(layout: TreemapLayout, scheme: dict[FileKind, str] | None = None) -> str:
    """Render the layout as SVG; one rect per cell, title = path and size."""
    b = layout.bounds
    header = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{fmt(b.w)}" height="{fmt(b.h)}" '
        f'viewBox="{fmt(b.x)} {fmt(b.y)} {fmt(b.w)} {fmt(b.h)}">'
    )
    lines = [header]
    for cell in layout.cells:
        fill = scheme[cell.file.kind] if scheme is not None else cell.color
        r = cell.rect
        lines.append(
            f'<rect x="{fmt(r.x)}" y="{fmt(r.y)}" width="{fmt(r.w)}" height="{fmt(r.h)}" '
            f'fill="{fill}" stroke="white" stroke-width="0.50">'
            f"<title>{escape(cell.file.path)} ({cell.file.size} bytes)</title></rect>"
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
