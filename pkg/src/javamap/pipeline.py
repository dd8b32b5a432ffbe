"""End-to-end pipeline: scan, lex/parse, model, persist, measure, render.

Exit codes: 0 success; 1 parse failures under fail_on_parse_error, or model
errors; 2 I/O and configuration errors. Per-file diagnostics go to the error
stream with file:line:col prefixes. Every output lands inside output_dir.
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass, field

from .charts import emit_artifact_summary_chart, emit_package_bar_chart
from .graphs import emit_class_graph, emit_package_graph
from .lexer import LexError, tokenize
from .metrics import (
    MetricReport,
    PlanError,
    UnknownMetricId,
    build_report,
    default_plan,
    export_csv,
    export_json,
    load_plan,
)
from .model import ModelError, SemanticModel, build_semantic_model
from .parser import ParseError, parse_unit
from .scanner import ProjectInventory, RootNotFound, scan_project
from .store import persist
from .syntax import CompilationUnit, dump_tree
from .treemap import Rect, emit_treemap_svg, layout_treemap

EMIT_CHOICES = (
    "store", "report_csv", "report_json",
    "package_graph", "class_graph", "treemap", "charts",
)

TREEMAP_BOUNDS = Rect(0.0, 0.0, 1024.0, 640.0)


@dataclass
class RunConfig:
    input_root: str
    output_dir: str
    plan_path: str | None = None
    emit: frozenset[str] = frozenset(EMIT_CHOICES)
    fail_on_parse_error: bool = False
    dump_ast: bool = False


@dataclass
class RunSummary:
    exit_code: int = 0
    artifact_count: int = 0
    component_count: int = 0
    parsed_count: int = 0
    diagnostics: list[str] = field(default_factory=list)
    outputs: list[str] = field(default_factory=list)


def _parse_components(
    inventory: ProjectInventory, summary: RunSummary, stderr,
) -> list[CompilationUnit]:
    units = []
    for record in inventory.components:
        full = os.path.join(inventory.root, record.path.replace("/", os.sep))
        try:
            with open(full, "r", encoding="utf-8") as fh:
                source = fh.read()
        except UnicodeDecodeError as exc:
            summary.diagnostics.append(f"{record.path}:1:1: not valid UTF-8 text ({exc.reason})")
            continue
        try:
            units.append(parse_unit(tokenize(source, record.path), record.path))
        except LexError as exc:
            summary.diagnostics.append(str(exc))
        except ParseError as exc:
            summary.diagnostics.append(str(exc))
    for line in summary.diagnostics:
        print(line, file=stderr)
    return units


def _write(path: str, text: str, summary: RunSummary) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    summary.outputs.append(path)


def run(config: RunConfig, stdout=None, stderr=None) -> RunSummary:
    """Execute the pipeline for one project tree."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    summary = RunSummary()

    unknown = config.emit - set(EMIT_CHOICES)
    if unknown or not config.emit:
        print(f"error: bad emit set: {sorted(unknown) or 'empty'}", file=stderr)
        summary.exit_code = 2
        return summary

    try:
        plan = load_plan(config.plan_path) if config.plan_path else default_plan()
    except (OSError, PlanError) as exc:
        print(f"error: cannot load plan: {exc}", file=stderr)
        summary.exit_code = 2
        return summary

    try:
        inventory = scan_project(config.input_root)
    except RootNotFound as exc:
        print(f"error: {exc}", file=stderr)
        summary.exit_code = 2
        return summary

    summary.artifact_count = len(inventory.files)
    summary.component_count = len(inventory.components)

    units = _parse_components(inventory, summary, stderr)
    summary.parsed_count = len(units)
    if config.dump_ast:
        for unit in units:
            stdout.write(dump_tree(unit))
    if summary.diagnostics and config.fail_on_parse_error:
        summary.exit_code = 1
        return summary

    try:
        model = build_semantic_model(inventory, units)
    except ModelError as exc:
        print(f"error: {exc}", file=stderr)
        summary.exit_code = 1
        return summary

    try:
        report = build_report(model, plan, units)
    except (PlanError, UnknownMetricId) as exc:
        print(f"error: cannot build report: {exc}", file=stderr)
        summary.exit_code = 2
        return summary

    try:
        _emit_outputs(config, inventory, model, report, summary)
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        summary.exit_code = 2
        return summary

    print(
        f"analyzed {summary.artifact_count} files "
        f"({summary.component_count} java, {summary.parsed_count} parsed); "
        f"{len(summary.outputs)} outputs in {config.output_dir}",
        file=stdout,
    )
    return summary


def _emit_outputs(
    config: RunConfig,
    inventory: ProjectInventory,
    model: SemanticModel,
    report: MetricReport,
    summary: RunSummary,
) -> None:
    out = config.output_dir
    os.makedirs(out, exist_ok=True)
    join = os.path.join
    if "store" in config.emit:
        store_dir = join(out, "store")
        persist(model, store_dir)
        summary.outputs.append(store_dir)
        _write(join(store_dir, "metrics.csv"), export_csv(report), summary)
    if "report_csv" in config.emit:
        _write(join(out, "report.csv"), export_csv(report), summary)
    if "report_json" in config.emit:
        _write(join(out, "report.json"), export_json(report), summary)
    if "package_graph" in config.emit:
        _write(join(out, "package_graph.dot"), emit_package_graph(model), summary)
    if "class_graph" in config.emit:
        _write(join(out, "class_graph.dot"), emit_class_graph(model), summary)
    if "treemap" in config.emit:
        layout = layout_treemap(inventory, TREEMAP_BOUNDS)
        _write(join(out, "treemap.svg"), emit_treemap_svg(layout), summary)
    if "charts" in config.emit:
        _write(join(out, "package_chart.svg"), emit_package_bar_chart(report), summary)
        _write(join(out, "artifact_chart.svg"), emit_artifact_summary_chart(report), summary)
