"""Report documents and their text, JSON, CSV and SVG renderings.

Text tables use two decimals per cell. Scalar results in text are printed
with ``precision`` significant digits; JSON always carries full precision.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass, field
from typing import Any, Sequence

from .descriptive import summarize
from .divergence import DivergencePoint
from .untidy import PipelineResult, TransformTrace
from .wtest import TestReport

CELL = 9


@dataclass
class ReportDocument:
    command: str
    config: dict[str, Any]
    sections: list[dict[str, Any]] = field(default_factory=list)
    result: dict[str, Any] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {"command": self.command, "config": self.config, "sections": self.sections,
                "result": self.result, "warnings": self.warnings}


def fmt(x, precision: int = 6) -> str:
    if isinstance(x, bool) or x is None:
        return json.dumps(x)
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        if x == 0.0:
            return "0"
        return format(x, f".{precision}g")
    if isinstance(x, (list, tuple)):
        return " ".join(fmt(v, precision) for v in x)
    return str(x)


def _cell(x) -> str:
    if x is None:
        return " " * CELL
    if isinstance(x, str):
        return f"{x:>{CELL}}"
    if isinstance(x, int) and not isinstance(x, bool):
        return f"{x:>{CELL}d}"
    text = f"{x:.2f}"
    if text == "-0.00":
        text = "0.00"
    return f"{text:>{CELL}}"


def _report_dict(rep: TestReport) -> dict[str, Any]:
    sa, sb = rep.group_summaries
    return {
        "impact": rep.impact,
        "ci_low": rep.ci_low,
        "ci_high": rep.ci_high,
        "ci_multiplier": rep.ci_multiplier,
        "pooled_sd": rep.pooled_sd,
        "se_diff": rep.se_diff,
        "t": rep.t,
        "df": rep.df,
        "df_penalty": rep.df_penalty,
        "p": rep.p,
        "certainty": rep.certainty,
        "category": rep.category.value,
        "category_label": rep.category.label,
        "weight_means": [sa.mean, sb.mean],
        "weight_sds": [sa.sd, sb.sd],
        "n": [sa.n, sb.n],
    }


def _column_block(title: str, pair) -> dict[str, Any]:
    a, b = pair
    va, vb = list(a), list(b)
    sa, sb = summarize(va), summarize(vb)
    total = summarize(va + vb)
    return {"title": title, "values": [va, vb], "mean": [sa.mean, sb.mean],
            "sd": [sa.sd, sb.sd], "n": [sa.n, sb.n],
            "total_mean": total.mean, "total_sd": total.sd}


def _trace_section(trace: TransformTrace, chosen: bool) -> dict[str, Any]:
    return {
        "transform": trace.kind.name,
        "chosen": chosen,
        "df_penalty": trace.kind.df_penalty,
        "pooled_mean": trace.pooled_mean,
        "pooled_sd": trace.pooled_sd,
        "skew": trace.skew,
        "saturated": trace.saturated,
        "columns": [
            _column_block("Transformed", trace.transformed),
            _column_block("Normalize x SD", trace.z_values),
            _column_block("Prob from SD", trace.probabilities),
            _column_block("Weight from Prob", trace.weights),
        ],
        "test": _report_dict(trace.report),
    }


def untidy_document(result: PipelineResult, labels: Sequence[str], config: dict) -> ReportDocument:
    doc = ReportDocument(command="untidy", config=dict(config, groups=list(labels)))
    for i, tr in enumerate(result.traces):
        doc.sections.append(_trace_section(tr, i == result.chosen))
        doc.warnings.extend(tr.report.warnings)
    for name, why in result.skipped.items():
        doc.warnings.append(f"skipped transform {name}: {why}")
    doc.warnings.extend(result.warnings)
    best = result.best
    doc.result = {"chosen_transform": best.kind.name, "skew": best.skew,
                  **_report_dict(best.report),
                  "inverse_mapped_means": list(result.inverse_mapped_means),
                  "raw_means": list(result.raw_means)}
    return doc


def wtest_document(rep: TestReport, probs: Sequence[Sequence[float]], weights: Sequence[Sequence[float]],
                   labels: Sequence[str], config: dict) -> ReportDocument:
    doc = ReportDocument(command="wtest", config=dict(config, groups=list(labels)))
    doc.sections.append({"columns": [_column_block("Probability", probs),
                                     _column_block("Weight from Prob", weights)]})
    doc.result = _report_dict(rep)
    doc.warnings.extend(rep.warnings)
    return doc


def _table_lines(columns: list[dict], labels: Sequence[str], skew=None) -> list[str]:
    head1 = " " * 12 + "".join(f"{c['title'][:2 * CELL - 1]:>{2 * CELL}}" for c in columns)
    head2 = " " * 12 + "".join(_cell(label[:CELL]) for _ in columns for label in labels)
    lines = [head1, head2]
    nrows = max(len(v) for c in columns for v in c["values"])
    for r in range(nrows):
        cells = []
        for c in columns:
            for v in c["values"]:
                cells.append(_cell(v[r] if r < len(v) else None))
        lines.append(f"{'Data' if r == 0 else '':<12}" + "".join(cells))
    for title, key in (("Mean x", "mean"), ("SD (stdev)", "sd"), ("n", "n")):
        lines.append(f"{title:<12}" + "".join(_cell(x) for c in columns for x in c[key]))
    lines.append(f"{'Total Mean':<12}" + "".join(_cell(None) + _cell(c["total_mean"]) for c in columns))
    lines.append(f"{'Total Std':<12}" + "".join(_cell(None) + _cell(c["total_sd"]) for c in columns))
    if skew is not None:
        lines.append(f"{'Skew':<12}" + " " * (CELL * (2 * len(columns) - 1)) + _cell(skew))
    return [line.rstrip() for line in lines]


def _result_lines(res: dict, precision: int) -> list[str]:
    return [f"{key}: {fmt(value, precision)}" for key, value in res.items()]


def _test_line(test: dict) -> str:
    return ("Impact {i}  95% CI {lo} .. {hi}  SD {sd}  SE {se}  t {t}  DF {df}  p {p}  C {c}  {label}"
            .format(i=_cell(test["impact"]).strip(), lo=_cell(test["ci_low"]).strip(),
                    hi=_cell(test["ci_high"]).strip(),
                    sd="-" if test["pooled_sd"] is None else _cell(test["pooled_sd"]).strip(),
                    se=_cell(test["se_diff"]).strip(), t=_cell(test["t"]).strip(),
                    df=fmt(test["df"], 4), p=f"{test['p']:.5f}", c=_cell(test["certainty"]).strip(),
                    label=test["category_label"]))


def render_text(doc: ReportDocument, precision: int = 6) -> str:
    out = [f"command: {doc.command}"]
    for key, value in doc.config.items():
        out.append(f"config.{key}: {fmt(value, precision)}")
    labels = doc.config.get("groups", ["a", "b"])
    for sec in doc.sections:
        out.append("")
        if "transform" in sec:
            mark = " (chosen)" if sec["chosen"] else ""
            out.append(f"== transform: {sec['transform']}{mark} ==")
            out.extend(_table_lines(sec["columns"], labels, sec["skew"]))
            out.append(_test_line(sec["test"]))
        else:
            out.extend(_table_lines(sec["columns"], labels))
    out.append("")
    out.append("== result ==")
    out.extend(_result_lines(doc.result, precision))
    if "category" in doc.result:
        out.append(f"label: {doc.result['category_label']}")
    for w in doc.warnings:
        out.append(f"warning: {w}")
    return "\n".join(out) + "\n"


def _jsonable(x):
    if isinstance(x, float) and not math.isfinite(x):
        return "NaN" if math.isnan(x) else ("Infinity" if x > 0 else "-Infinity")
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def render_json(payload) -> str:
    if isinstance(payload, ReportDocument):
        payload = payload.to_dict()
    return json.dumps(_jsonable(payload), indent=2, allow_nan=False) + "\n"


DIVERGENCE_COLUMNS = ("dataset", "scale", "mean_pct", "mean_pct_diff", "sd_pct_diff",
                      "mean_prob_space", "mean_weight_space", "sd_prob_space", "sd_weight_space")


def divergence_rows(points: Sequence[DivergencePoint]) -> list[dict[str, Any]]:
    return [{"dataset": p.dataset, "scale": p.scale, "mean_pct": p.mean_pct,
             "mean_pct_diff": p.mean_pct_diff, "sd_pct_diff": p.sd_pct_diff,
             "mean_prob_space": p.mean_prob_space, "mean_weight_space": p.mean_weight_space,
             "sd_prob_space": p.sd_prob_space, "sd_weight_space": p.sd_weight_space}
            for p in points]


def render_csv(points: Sequence[DivergencePoint], precision: int = 6) -> str:
    buf = io.StringIO()
    buf.write(",".join(DIVERGENCE_COLUMNS) + "\n")
    for row in divergence_rows(points):
        buf.write(",".join(fmt(row[c], precision) for c in DIVERGENCE_COLUMNS) + "\n")
    return buf.getvalue()


_SVG_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def render_svg(points: Sequence[DivergencePoint], width: int = 640, panel_height: int = 260) -> str:
    """Two stacked panels (mean and SD percent difference) against log10 of the mean percent."""
    series: dict[str, list[DivergencePoint]] = {}
    for p in points:
        series.setdefault(p.dataset, []).append(p)
    margin_l, margin_r, margin_t, margin_b = 70, 20, 30, 45
    height = 2 * (panel_height + margin_t + margin_b)
    xs = [math.log10(p.mean_pct) for p in points if p.mean_pct > 0]
    x_lo, x_hi = (min(xs), max(xs)) if xs else (0.0, 1.0)
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 0.5, x_hi + 0.5
    plot_w = width - margin_l - margin_r
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
             f'viewBox="0 0 {width} {height}">',
             '<rect width="100%" height="100%" fill="white"/>']
    for k, (attr, title) in enumerate((("mean_pct_diff", "Mean: % difference"),
                                         ("sd_pct_diff", "SD: % difference"))):
        top = k * (panel_height + margin_t + margin_b) + margin_t
        ys = [getattr(p, attr) for p in points if math.isfinite(getattr(p, attr))]
        y_lo, y_hi = (min(ys + [0.0]), max(ys + [0.0]))
        if y_hi == y_lo:
            y_lo, y_hi = y_lo - 1.0, y_hi + 1.0

        def px(x, y):
            sx = margin_l + (x - x_lo) / (x_hi - x_lo) * plot_w
            sy = top + (y_hi - y) / (y_hi - y_lo) * panel_height
            return f"{sx:.2f},{sy:.2f}"

        parts.append(f'<rect x="{margin_l}" y="{top}" width="{plot_w}" height="{panel_height}" '
                     'fill="none" stroke="black"/>')
        parts.append(f'<text x="{margin_l}" y="{top - 8}" font-size="13">{title}</text>')
        parts.append(f'<text x="{margin_l + plot_w / 2:.0f}" y="{top + panel_height + 32}" '
                     'font-size="12" text-anchor="middle">log10(mean %)</text>')
        parts.append(f'<text x="16" y="{top + panel_height / 2:.0f}" font-size="12" '
                     f'transform="rotate(-90 16 {top + panel_height / 2:.0f})" '
                     'text-anchor="middle">% difference (prob vs W)</text>')
        for label, value in ((f"{x_lo:.2f}", x_lo), (f"{x_hi:.2f}", x_hi)):
            parts.append(f'<text x="{px(value, y_lo).split(",")[0]}" y="{top + panel_height + 16}" '
                         f'font-size="11" text-anchor="middle">{label}</text>')
        for value in (y_lo, y_hi):
            parts.append(f'<text x="{margin_l - 6}" y="{px(x_lo, value).split(",")[1]}" '
                         f'font-size="11" text-anchor="end">{value:.3g}</text>')
        for i, (name, pts) in enumerate(series.items()):
            coords = " ".join(px(math.log10(p.mean_pct), getattr(p, attr)) for p in pts
                              if p.mean_pct > 0 and math.isfinite(getattr(p, attr)))
            dash = ' stroke-dasharray="6,4"' if i == 0 else ""
            parts.append(f'<polyline fill="none" stroke="{_SVG_COLORS[i % len(_SVG_COLORS)]}" '
                         f'stroke-width="1.5"{dash} points="{coords}"><title>{name}</title></polyline>')
            if k == 0:
                parts.append(f'<text x="{margin_l + plot_w - 4}" y="{top + 16 + 14 * i}" font-size="11" '
                             f'text-anchor="end" fill="{_SVG_COLORS[i % len(_SVG_COLORS)]}">{name}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
