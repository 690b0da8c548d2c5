"""Byte-stable text / JSON / CSV rendering of result objects."""

from __future__ import annotations

import csv
import io
import json

from .graph.io import to_graph6
from .metrics import MetricsSummary
from .theorems import FamilyRow, NgScanResult, ScanSummary, Status, TheoremReport
from .triameter import TriameterResult

__all__ = ["FORMATS", "GraphReport", "render_report"]

FORMATS = ("text", "json", "csv")

SCAN_CSV_HEADER = ["theorem", "holds", "violated", "inapplicable", "inapplicable_cap"]
NG_CSV_HEADER = [
    "graph6", "n", "tr", "co_tr", "diam", "co_diam", "sum", "product", "exceeds_product_bound",
]


class GraphReport:
    """Triameter plus metrics for one input graph (the ``compute`` verb)."""

    def __init__(self, graph, result: TriameterResult, metrics: MetricsSummary):
        self.graph = graph
        self.result = result
        self.metrics = metrics

    def as_dict(self) -> dict:
        return {
            "graph6": to_graph6(self.graph) if self.graph.n <= 62 else None,
            "tr": self.result.value,
            "witness": list(self.result.witness),
            "metrics": self.metrics.as_dict(),
        }


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _fmt_value(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return ",".join(map(str, v))
    return str(v)


# -- per-type renderers ------------------------------------------------------


def _triameter(r: TriameterResult, fmt: str) -> str:
    if fmt == "json":
        return _dumps({"tr": r.value, "witness": list(r.witness)})
    if fmt == "csv":
        return _csv(["tr", "witness"], [[r.value, _fmt_value(r.witness)]])
    return str(r) + "\n"


def _graph_reports(reports: list[GraphReport], fmt: str) -> str:
    if fmt == "json":
        return _dumps([r.as_dict() for r in reports])
    if fmt == "csv":
        keys = list(reports[0].metrics.as_dict()) if reports else []
        header = ["graph6", "tr", "witness"] + keys
        rows = []
        for r in reports:
            d = r.as_dict()
            rows.append([d["graph6"], d["tr"], _fmt_value(d["witness"])]
                        + [_fmt_value(d["metrics"][k]) for k in keys])
        return _csv(header, rows)
    blocks = []
    for r in reports:
        d = r.as_dict()
        lines = [f"graph6={d['graph6']}", str(r.result)]
        for key, value in d["metrics"].items():
            lines.append(f"{key}={_fmt_value(value)}")
        blocks.append("\n".join(lines) + "\n")
    return "\n".join(blocks)


def _theorem_reports(reports: list[TheoremReport], fmt: str) -> str:
    if fmt == "json":
        return _dumps([r.as_dict() for r in reports])
    if fmt == "csv":
        rows = [[r.graph6, r.id, r.status.value, json.dumps(r.values, sort_keys=True)] for r in reports]
        return _csv(["graph6", "theorem", "status", "values"], rows)
    lines = []
    for r in reports:
        vals = " ".join(f"{k}={_fmt_value(v)}" for k, v in sorted(r.values.items()))
        lines.append(f"{r.graph6} {r.id} {r.status.value} {vals}".rstrip())
    return "\n".join(lines) + "\n"


def _scan(s: ScanSummary, fmt: str, timing: bool) -> str:
    if fmt == "json":
        return _dumps(s.as_dict(timing=timing))
    rows = [[t] + [s.counts[t][st.value] for st in Status] for t in s.ids]
    if fmt == "csv":
        return _csv(SCAN_CSV_HEADER, rows)
    lines = [
        f"scan stream={s.stream} orders={_fmt_value(s.orders)} graphs={s.graphs_scanned}",
    ]
    for row in rows:
        lines.append(
            f"{row[0]:<26} holds={row[1]} violated={row[2]} inapplicable={row[3]} "
            f"inapplicable_cap={row[4]}"
        )
    for v in s.violations:
        vals = " ".join(f"{k}={_fmt_value(x)}" for k, x in sorted(v.values.items()))
        lines.append(f"VIOLATION {v.id} graph6={v.graph6} {vals}")
    if timing:
        lines.append(f"elapsed_ms={s.elapsed_ms}")
    return "\n".join(lines) + "\n"


def _ng_row(r) -> list:
    return [r.graph6, r.n, r.tr, r.co_tr, r.diam, r.co_diam, r.sum, r.product,
            int(r.exceeds_product_bound)]


def _ng(res: NgScanResult, fmt: str) -> str:
    if fmt == "csv":
        return _csv(NG_CSV_HEADER, [_ng_row(r) for r in res.members])
    summary = {
        "n": res.n,
        "graphs_scanned": res.graphs_scanned,
        "both_connected": res.both_connected,
        "family_members": len(res.members),
        "product_bound_exceptions": len(res.exceptions),
        "min_sum": res.min_sum,
        "max_sum": res.max_sum,
        "sum_bound": res.sum_bound,
        "min_product": res.min_product,
        "max_product": res.max_product,
        "max_product_outside_family": res.max_product_outside_family,
        "product_bound": res.product_bound,
    }
    if fmt == "json":
        summary["members"] = [dict(zip(NG_CSV_HEADER, _ng_row(r))) for r in res.members]
        return _dumps(summary)
    lines = [f"{k}={v}" for k, v in summary.items()]
    for r in res.exceptions:
        lines.append(f"EXCEPTION graph6={r.graph6} tr={r.tr} co_tr={r.co_tr} product={r.product}")
    return "\n".join(lines) + "\n"


def _family(rows: list[FamilyRow], fmt: str) -> str:
    table = [[r.spec, r.computed, r.expected, int(r.match)] for r in rows]
    header = ["family", "computed", "expected", "match"]
    if fmt == "json":
        return _dumps([dict(zip(header, row)) for row in table])
    if fmt == "csv":
        return _csv(header, table)
    lines = [f"{r.spec} tr={r.computed} expected={r.expected} {'ok' if r.match else 'MISMATCH'}"
             for r in rows]
    return "\n".join(lines) + "\n"


def render_report(report, fmt: str = "text", timing: bool = False) -> str:
    """Render any result object. Output depends only on the report's content."""
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")
    if isinstance(report, TriameterResult):
        return _triameter(report, fmt)
    if isinstance(report, GraphReport):
        return _graph_reports([report], fmt)
    if isinstance(report, ScanSummary):
        return _scan(report, fmt, timing)
    if isinstance(report, NgScanResult):
        return _ng(report, fmt)
    if isinstance(report, TheoremReport):
        return _theorem_reports([report], fmt)
    if isinstance(report, list):
        if all(isinstance(r, GraphReport) for r in report):
            return _graph_reports(report, fmt)
        if all(isinstance(r, TheoremReport) for r in report):
            return _theorem_reports(report, fmt)
        if all(isinstance(r, FamilyRow) for r in report):
            return _family(report, fmt)
    raise TypeError(f"cannot render {type(report).__name__}")
