"""Size, complexity, and inheritance metrics under a goal-question-metric plan.

"Control paths" is McCabe cyclomatic complexity: 1 plus the number of
decision points in a method body, where decision points are if/while/do/for,
each case label of a switch, each catch clause, the ternary operator, and
the short-circuit operators && and ||. DIT counts extends links only; a
class with no superclass, or an unresolved placeholder, has DIT 0.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from enum import Enum

from . import syntax as ast
from .model import ClassNode, PackageOrigin, SemanticModel, _qualified
from .syntax import CompilationUnit, MethodDecl


class MetricScope(str, Enum):
    APPLICATION = "application"
    PACKAGE = "package"
    CLASS = "class"
    METHOD = "method"


@dataclass(frozen=True)
class MetricDef:
    id: str
    name: str
    unit: str
    scope: MetricScope


@dataclass
class GqmQuestion:
    question: str
    metric_ids: list[str]


@dataclass
class GqmPlan:
    goal: str
    questions: list[GqmQuestion]
    metrics: list[MetricDef]

    def validate(self) -> None:
        ids = [m.id for m in self.metrics]
        if len(set(ids)) != len(ids):
            raise PlanError("duplicate metric ids in plan")
        known = set(ids)
        referenced: set[str] = set()
        for q in self.questions:
            for mid in q.metric_ids:
                if mid not in known:
                    raise PlanError(f"question references undefined metric {mid!r}")
                referenced.add(mid)
        unreferenced = known - referenced
        if unreferenced:
            raise PlanError(
                "metrics not referenced by any question: " + ", ".join(sorted(unreferenced))
            )

    def scope_of(self, metric_id: str) -> MetricScope:
        for m in self.metrics:
            if m.id == metric_id:
                return m.scope
        raise UnknownMetricId(metric_id)


@dataclass(frozen=True)
class MetricValue:
    metric_id: str
    subject_id: str
    value: int


@dataclass
class MetricReport:
    plan: GqmPlan
    values: list[MetricValue] = field(default_factory=list)


class PlanError(Exception):
    pass


class UnknownMetricId(Exception):
    def __init__(self, metric_id: str) -> None:
        super().__init__(f"unknown metric id: {metric_id}")
        self.metric_id = metric_id


def method_subject_id(class_qualified_name: str, method: MethodDecl) -> str:
    return f"mth:{class_qualified_name}#{method.signature()}"


# --- individual measures ----------------------------------------------------


def decision_point_count(body: ast.Block) -> int:
    count = 0
    for stmt in ast.iter_stmts(body):
        if isinstance(stmt, (ast.If, ast.While, ast.DoWhile, ast.For)):
            count += 1
        elif isinstance(stmt, ast.Switch):
            count += sum(len(group.labels) for group in stmt.groups)
        elif isinstance(stmt, ast.Try):
            count += len(stmt.catches)
    for expr in ast.stmt_all_exprs(body):
        if isinstance(expr, ast.Ternary):
            count += 1
        elif isinstance(expr, ast.Binary) and expr.op in ("&&", "||"):
            count += 1
    return count


def compute_control_paths(method: MethodDecl) -> int:
    """Cyclomatic complexity of a bodied method (always >= 1)."""
    if method.body is None:
        raise ValueError(f"method {method.name} has no body")
    return 1 + decision_point_count(method.body)


def compute_size_metrics(model: SemanticModel) -> list[MetricValue]:
    app = model.application
    project_packages = [p for p in model.packages if p.origin is PackageOrigin.PROJECT_FILE]
    library_packages = [p for p in model.packages if p.origin is PackageOrigin.LIBRARY]
    values = [
        MetricValue("artifact_count", app.id, len(app.artifacts)),
        MetricValue("component_count", app.id, len(app.components)),
        MetricValue("package_count", app.id, len(project_packages)),
        MetricValue("library_package_count", app.id, len(library_packages)),
        MetricValue("class_count", app.id, sum(1 for c in model.classes if c.resolved)),
    ]
    for pkg in model.packages:
        values.append(MetricValue("package_class_count", pkg.id, len(pkg.member_class_ids)))
        values.append(MetricValue("package_source_bytes", pkg.id, pkg.total_source_bytes))
    return values


def compute_class_complexity(cls: ClassNode, methods: list[MethodDecl]) -> list[MetricValue]:
    """Per-class method count, statement count, and summed method complexity."""
    weighted = sum(compute_control_paths(m) for m in methods if m.body is not None)
    return [
        MetricValue("method_count", cls.id, cls.method_count),
        MetricValue("statement_count", cls.id, cls.statement_count),
        MetricValue("weighted_complexity", cls.id, weighted),
    ]


def compute_inheritance_metrics(model: SemanticModel) -> list[MetricValue]:
    """DIT and NOC per class (placeholders included, so sum(NOC) == |extends|)."""
    parent = model.extends_parent()
    depth: dict[str, int] = {}

    def dit(node_id: str) -> int:
        if node_id in depth:
            return depth[node_id]
        up = parent.get(node_id)
        depth[node_id] = 0 if up is None else dit(up) + 1
        return depth[node_id]

    children: dict[str, int] = {}
    for child_id, parent_id in parent.items():
        children[parent_id] = children.get(parent_id, 0) + 1

    values = []
    for cls in model.classes:
        values.append(MetricValue("dit", cls.id, dit(cls.id)))
        values.append(MetricValue("noc", cls.id, children.get(cls.id, 0)))
    return values


# --- plan and report ---------------------------------------------------------


def default_plan() -> GqmPlan:
    count = "count"
    metrics = [
        MetricDef("artifact_count", "Project artifacts", count, MetricScope.APPLICATION),
        MetricDef("component_count", "Source components", count, MetricScope.APPLICATION),
        MetricDef("package_count", "Project packages", count, MetricScope.APPLICATION),
        MetricDef("library_package_count", "Library packages", count, MetricScope.APPLICATION),
        MetricDef("class_count", "Resolved classes", count, MetricScope.APPLICATION),
        MetricDef("package_class_count", "Classes in package", count, MetricScope.PACKAGE),
        MetricDef("package_source_bytes", "Package source size", "bytes", MetricScope.PACKAGE),
        MetricDef("member_count", "Fields plus methods", count, MetricScope.CLASS),
        MetricDef("method_count", "Methods", count, MetricScope.CLASS),
        MetricDef("declaration_count", "Field and local declarations", count, MetricScope.CLASS),
        MetricDef("statement_count", "Statements", count, MetricScope.CLASS),
        MetricDef("expression_count", "Expressions", count, MetricScope.CLASS),
        MetricDef("weighted_complexity", "Summed method control paths", "paths", MetricScope.CLASS),
        MetricDef("control_paths", "Control paths", "paths", MetricScope.METHOD),
        MetricDef("dit", "Depth of inheritance tree", "levels", MetricScope.CLASS),
        MetricDef("noc", "Number of direct children", count, MetricScope.CLASS),
    ]
    questions = [
        GqmQuestion(
            "How large is the application and how is it distributed over packages?",
            [
                "artifact_count", "component_count", "package_count",
                "library_package_count", "class_count",
                "package_class_count", "package_source_bytes", "member_count",
            ],
        ),
        GqmQuestion(
            "How complex is the control flow of methods and classes?",
            [
                "control_paths", "weighted_complexity", "method_count",
                "declaration_count", "statement_count", "expression_count",
            ],
        ),
        GqmQuestion(
            "How deep and how wide is the inheritance structure?",
            ["dit", "noc"],
        ),
    ]
    return GqmPlan(
        goal="Assess fault-proneness indicators of the application",
        questions=questions,
        metrics=metrics,
    )


def plan_from_dict(data: dict) -> GqmPlan:
    try:
        plan = GqmPlan(
            goal=data["goal"],
            questions=[
                GqmQuestion(question=q["question"], metric_ids=list(q["metric_ids"]))
                for q in data["questions"]
            ],
            metrics=[
                MetricDef(
                    id=m["id"], name=m["name"], unit=m["unit"],
                    scope=MetricScope(m["scope"]),
                )
                for m in data["metrics"]
            ],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise PlanError(f"malformed plan: {exc}") from exc
    plan.validate()
    return plan


def load_plan(path: str) -> GqmPlan:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise PlanError(f"plan is not valid JSON: {exc}") from exc
    return plan_from_dict(data)


IMPLEMENTED_METRIC_IDS = (
    "artifact_count", "component_count", "package_count", "library_package_count",
    "class_count", "package_class_count", "package_source_bytes",
    "member_count", "method_count", "declaration_count", "statement_count",
    "expression_count", "weighted_complexity", "control_paths", "dit", "noc",
)


def _compute_available(
    model: SemanticModel, units: list[CompilationUnit]
) -> dict[str, list[MetricValue]]:
    decls: dict[str, ast.TypeDecl] = {}
    for unit in units:
        for decl in unit.types:
            decls[_qualified(unit.package_name or "", decl.name)] = decl

    available: dict[str, list[MetricValue]] = {mid: [] for mid in IMPLEMENTED_METRIC_IDS}

    def put(value: MetricValue) -> None:
        available[value.metric_id].append(value)

    for value in compute_size_metrics(model):
        put(value)
    for value in compute_inheritance_metrics(model):
        put(value)

    for cls in model.classes:
        if not cls.resolved:
            continue
        decl = decls.get(cls.qualified_name)
        methods = decl.methods if decl is not None else []
        for value in compute_class_complexity(cls, methods):
            put(value)
        put(MetricValue("declaration_count", cls.id, cls.declaration_count))
        put(MetricValue("expression_count", cls.id, cls.expression_count))
        members = cls.method_count
        if decl is not None:
            members += sum(len(f.names) for f in decl.fields)
        put(MetricValue("member_count", cls.id, members))
        for method in methods:
            if method.body is None:
                continue  # value-absent for abstract methods
            put(
                MetricValue(
                    "control_paths",
                    method_subject_id(cls.qualified_name, method),
                    compute_control_paths(method),
                )
            )

    for values in available.values():
        values.sort(key=lambda v: v.subject_id)
    return available


def build_report(
    model: SemanticModel, plan: GqmPlan, units: list[CompilationUnit]
) -> MetricReport:
    """Evaluate every plan metric over its in-scope subjects.

    The parsed units supply what the model alone cannot: method bodies for
    control-path metrics and field lists for member counts. Raises
    UnknownMetricId for plan metrics this measurer does not implement.
    """
    plan.validate()
    available = _compute_available(model, units)
    values: list[MetricValue] = []
    for metric in plan.metrics:
        if metric.id not in available:
            raise UnknownMetricId(metric.id)
        values.extend(available[metric.id])
    return MetricReport(plan=plan, values=values)


# --- report export ------------------------------------------------------------


def export_report(report: MetricReport, format: str) -> str:
    """Serialize a report as "csv" or "json" (case-insensitive)."""
    fmt = format.lower()
    if fmt == "csv":
        return export_csv(report)
    if fmt == "json":
        return export_json(report)
    raise ValueError(f"unknown report format: {format!r}")


def export_csv(report: MetricReport) -> str:
    """CSV rows (metric_id, scope, subject, value), sorted; deterministic."""
    scope = {m.id: m.scope.value for m in report.plan.metrics}
    lines = ["metric_id,scope,subject,value"]
    rows = sorted(report.values, key=lambda v: (v.metric_id, v.subject_id))
    for v in rows:
        subject = v.subject_id
        if any(ch in subject for ch in ",\"\n"):
            subject = '"' + subject.replace('"', '""') + '"'
        lines.append(f"{v.metric_id},{scope[v.metric_id]},{subject},{v.value}")
    return "\n".join(lines) + "\n"


def export_json(report: MetricReport) -> str:
    """Canonical JSON of the full report, plan included."""
    payload = {
        "plan": {
            "goal": report.plan.goal,
            "questions": [asdict(q) for q in report.plan.questions],
            "metrics": [
                {"id": m.id, "name": m.name, "unit": m.unit, "scope": m.scope.value}
                for m in report.plan.metrics
            ],
        },
        "values": [
            {"metric_id": v.metric_id, "subject_id": v.subject_id, "value": v.value}
            for v in report.values
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
