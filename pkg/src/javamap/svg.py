"""Small shared helpers for hand-built SVG documents."""

from __future__ import annotations

import xml.etree.ElementTree as ElementTree


def escape(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def fmt(value: float) -> str:
    """Fixed two-decimal formatting keeps emitted documents byte-stable."""
    return f"{value:.2f}"


def check_svg(text: str) -> None:
    """Raise ValueError unless text is well-formed XML with an svg root."""
    try:
        root = ElementTree.fromstring(text)
    except ElementTree.ParseError as exc:
        raise ValueError(f"not well-formed XML: {exc}") from exc
    tag = root.tag.rpartition("}")[2]
    if tag != "svg":
        raise ValueError(f"root element is {tag!r}, expected 'svg'")
