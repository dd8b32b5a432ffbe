"""SVG summary charts built straight from a metric report.

emit_package_bar_chart: grouped vertical bars per package (class count and
source size, each scaled against its own series maximum, both axes linear
from zero). emit_artifact_summary_chart: horizontal bars for the four
application-level size counts. Both emitters are deterministic.
"""

from __future__ import annotations

from .metrics import MetricReport
from .svg import escape, fmt

_COUNT_COLOR = "#4c78a8"
_SIZE_COLOR = "#f58518"
_AXIS_COLOR = "#333333"
_FONT = 'font-family="Helvetica,Arial,sans-serif"'


def _package_display(subject_id: str) -> str:
    name = subject_id.removeprefix("pkg:")
    return name if name else "(default)"


def _metric_values(report: MetricReport, metric_id: str) -> dict[str, int]:
    return {v.subject_id: v.value for v in report.values if v.metric_id == metric_id}


def _tick_labels(maximum: int, steps: int = 4) -> list[tuple[float, int]]:
    """(fraction of axis, tick value) pairs from 0 to maximum."""
    if maximum <= 0:
        return [(0.0, 0)]
    return [(i / steps, round(maximum * i / steps)) for i in range(steps + 1)]


def emit_package_bar_chart(report: MetricReport) -> str:
    counts = _metric_values(report, "package_class_count")
    sizes = _metric_values(report, "package_source_bytes")
    if not set(counts) == set(sizes):
        raise ValueError("report lacks matching package class-count and size metrics")
    packages = sorted(counts)

    width, height = 860, 460
    left, right, top, bottom = 70, 70, 50, 90
    plot_w = width - left - right
    plot_h = height - top - bottom
    baseline = top + plot_h

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<text x="{width / 2:.0f}" y="28" text-anchor="middle" font-size="18" {_FONT}>'
        "Packages: classes and source size</text>",
        f'<line x1="{left}" y1="{baseline}" x2="{left + plot_w}" y2="{baseline}" '
        f'stroke="{_AXIS_COLOR}" stroke-width="1"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{baseline}" '
        f'stroke="{_AXIS_COLOR}" stroke-width="1"/>',
        f'<line x1="{left + plot_w}" y1="{top}" x2="{left + plot_w}" y2="{baseline}" '
        f'stroke="{_AXIS_COLOR}" stroke-width="1"/>',
    ]
    max_count = max(counts.values(), default=0)
    max_size = max(sizes.values(), default=0)
    for fraction, value in _tick_labels(max_count):
        y = baseline - fraction * plot_h
        lines.append(
            f'<text x="{left - 8}" y="{fmt(y + 4)}" text-anchor="end" font-size="11" '
            f'fill="{_COUNT_COLOR}" {_FONT}>{value}</text>'
        )
    for fraction, value in _tick_labels(max_size):
        y = baseline - fraction * plot_h
        lines.append(
            f'<text x="{left + plot_w + 8}" y="{fmt(y + 4)}" text-anchor="start" font-size="11" '
            f'fill="{_SIZE_COLOR}" {_FONT}>{value}</text>'
        )
    lines.append(
        f'<text x="{left}" y="{height - 16}" font-size="12" fill="{_COUNT_COLOR}" {_FONT}>'
        "classes (left axis)</text>"
    )
    lines.append(
        f'<text x="{left + 180}" y="{height - 16}" font-size="12" fill="{_SIZE_COLOR}" {_FONT}>'
        "source bytes (right axis)</text>"
    )

    if packages:
        group_w = plot_w / len(packages)
        bar_w = group_w * 0.3
        for i, pkg_id in enumerate(packages):
            group_x = left + i * group_w
            count_h = plot_h * counts[pkg_id] / max_count if max_count else 0.0
            size_h = plot_h * sizes[pkg_id] / max_size if max_size else 0.0
            count_x = group_x + group_w / 2 - bar_w
            size_x = group_x + group_w / 2
            lines.append(
                f'<rect x="{fmt(count_x)}" y="{fmt(baseline - count_h)}" '
                f'width="{fmt(bar_w)}" height="{fmt(count_h)}" fill="{_COUNT_COLOR}"/>'
            )
            lines.append(
                f'<rect x="{fmt(size_x)}" y="{fmt(baseline - size_h)}" '
                f'width="{fmt(bar_w)}" height="{fmt(size_h)}" fill="{_SIZE_COLOR}"/>'
            )
            lines.append(
                f'<text x="{fmt(group_x + group_w / 2)}" y="{baseline + 18}" '
                f'text-anchor="middle" font-size="12" {_FONT}>'
                f"{escape(_package_display(pkg_id))}</text>"
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


_SUMMARY_ROWS = [
    ("artifact_count", "Artifacts"),
    ("component_count", "Components"),
    ("package_count", "Packages"),
    ("class_count", "Classes"),
]


def emit_artifact_summary_chart(report: MetricReport) -> str:
    app_values: dict[str, int] = {}
    for metric_id, _ in _SUMMARY_ROWS:
        found = _metric_values(report, metric_id)
        if not found:
            raise ValueError(f"report lacks application metric {metric_id}")
        app_values[metric_id] = next(iter(found.values()))

    width, height = 640, 260
    left, right, top, bottom = 130, 60, 50, 40
    plot_w = width - left - right
    row_h = (height - top - bottom) / len(_SUMMARY_ROWS)
    bar_h = row_h * 0.6
    maximum = max(app_values.values())

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<text x="{width / 2:.0f}" y="28" text-anchor="middle" font-size="18" {_FONT}>'
        "Source artifact summary</text>",
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{height - bottom}" '
        f'stroke="{_AXIS_COLOR}" stroke-width="1"/>',
    ]
    for i, (metric_id, label) in enumerate(_SUMMARY_ROWS):
        value = app_values[metric_id]
        length = plot_w * value / maximum if maximum else 0.0
        y = top + i * row_h + (row_h - bar_h) / 2
        mid = y + bar_h / 2 + 4
        lines.append(
            f'<text x="{left - 10}" y="{fmt(mid)}" text-anchor="end" font-size="13" {_FONT}>'
            f"{label}</text>"
        )
        lines.append(
            f'<rect x="{left}" y="{fmt(y)}" width="{fmt(length)}" height="{fmt(bar_h)}" '
            f'fill="{_COUNT_COLOR}"/>'
        )
        lines.append(
            f'<text x="{fmt(left + length + 8)}" y="{fmt(mid)}" text-anchor="start" '
            f'font-size="13" {_FONT}>{value}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
