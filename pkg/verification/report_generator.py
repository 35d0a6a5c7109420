"""
Report Generator

Renders verification results, hunt reports and the registry document as a
human-readable table, JSON or CSV. Output is deterministic: no timestamps,
numbers written with shortest round-trip repr.
"""

import csv
import io
import json
from pathlib import Path
from typing import Any, Literal, Optional, Sequence

from logkernel.models.verification import CSV_COLUMNS, HuntReport, VerificationResult
from verification.harness import format_params


OutputFormat = Literal["table", "json", "csv"]

# Digits shown for measured values in table output
TABLE_DIGITS = 15


def _num(value: Optional[float], digits: int = TABLE_DIGITS) -> str:
    return "-" if value is None else f"{value:.{digits}g}"


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


class ReportGenerator:
    """Formats run artifacts in one output format."""

    def __init__(self, fmt: OutputFormat = "table"):
        self.fmt = fmt

    # ===========================================
    # Verification results
    # ===========================================

    def render_results(self, results: Sequence[VerificationResult]) -> str:
        if self.fmt == "json":
            return json.dumps([r.model_dump() for r in results], indent=2) + "\n"
        if self.fmt == "csv":
            return self._results_csv(results)
        return self._results_table(results)

    def _results_csv(self, results: Sequence[VerificationResult]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for result in results:
            row = result.model_dump()
            row["params"] = format_params(result.params)
            writer.writerow([_csv_cell(row[column]) for column in CSV_COLUMNS])
        return buffer.getvalue()

    def _results_table(self, results: Sequence[VerificationResult]) -> str:
        header = ("identity", "params", "variant", "lhs", "rhs", "abs_diff", "verdict")
        rows = [
            (
                r.identity_id,
                format_params(r.params) or "-",
                r.variant or "-",
                _num(r.lhs),
                _num(r.rhs),
                _num(r.abs_diff, 3),
                r.verdict,
            )
            for r in results
        ]
        lines = _align([header] + rows)
        counts: dict[str, int] = {}
        for r in results:
            counts[r.verdict] = counts.get(r.verdict, 0) + 1
        summary = ", ".join(f"{verdict}={count}" for verdict, count in sorted(counts.items()))
        lines.append("")
        lines.append(f"{len(results)} checks: {summary or 'none'}")
        return "\n".join(lines) + "\n"

    # ===========================================
    # Hunt
    # ===========================================

    def render_hunt(self, report: HuntReport) -> str:
        if self.fmt == "json":
            return json.dumps(report.model_dump(), indent=2) + "\n"
        if self.fmt == "csv":
            return self._hunt_csv(report)
        return self._hunt_table(report)

    def _hunt_csv(self, report: HuntReport) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(("entry", "params", "lhs", "lhs_err", "regularization", "convention", "claimed", "verdict"))
        for entry in report.entries:
            for point in entry.points:
                for key, verdict in point.verdicts.items():
                    writer.writerow(
                        [
                            entry.entry,
                            format_params(point.params),
                            _csv_cell(point.lhs),
                            _csv_cell(point.lhs_err),
                            point.regularization,
                            key,
                            _csv_cell(point.claimed.get(key)),
                            verdict,
                        ]
                    )
        return buffer.getvalue()

    def _hunt_table(self, report: HuntReport) -> str:
        lines = [
            "=" * 60,
            f"  Table 129 hunt (convention: {report.convention}, tol: {report.tol:g})",
            "=" * 60,
        ]
        for entry in report.entries:
            lines.append("")
            lines.append(f"[{entry.entry:2d}] {entry.statement}")
            lines.append(f"     {entry.summary}")
            for point in entry.points:
                where = format_params(point.params) or "fixed"
                reg = "" if point.regularization == "none" else f" [{point.regularization}]"
                lines.append(f"     {where:<26} lhs = {_num(point.lhs)} +/- {_num(point.lhs_err, 2)}{reg}")
                for key, verdict in point.verdicts.items():
                    lines.append(f"       {key:<12} claimed = {_num(point.claimed.get(key))}  {verdict}")
                for note in point.notes:
                    lines.append(f"       note: {note}")
        if report.remark:
            lines.append("")
            lines.append("Log-ratio remark (claimed c/n with c = 2):")
            for fit in report.remark:
                lines.append(
                    f"  n={fit.n} {fit.interval:<8} lhs = {_num(fit.lhs)}  fitted c = {_num(fit.fitted_c, 10)}"
                )
        return "\n".join(lines) + "\n"

    # ===========================================
    # Registry and single values
    # ===========================================

    def render_registry(self, document: list[dict[str, Any]]) -> str:
        if self.fmt == "json":
            return json.dumps(document, indent=2) + "\n"
        rows = [("id", "params", "status", "citation")]
        rows += [
            (d["id"], ",".join(d["params"]) or "-", d["status_hint"], d["citation"]) for d in document
        ]
        if self.fmt == "csv":
            buffer = io.StringIO()
            csv.writer(buffer, lineterminator="\n").writerows(rows)
            return buffer.getvalue()
        return "\n".join(_align(rows)) + "\n"

    def render_record(self, record: dict[str, Any]) -> str:
        """One flat record (eval / sum output)."""
        if self.fmt == "json":
            return json.dumps(record, indent=2) + "\n"
        if self.fmt == "csv":
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(record.keys())
            writer.writerow([_csv_cell(v) for v in record.values()])
            return buffer.getvalue()
        width = max(len(k) for k in record)
        return "\n".join(f"{k:<{width}}  {_csv_cell(v)}" for k, v in record.items()) + "\n"

    # ===========================================
    # Output
    # ===========================================

    @staticmethod
    def write(text: str, out: Optional[Path] = None) -> None:
        """Write to ``out`` if given, else stdout."""
        if out is None:
            print(text, end="")
            return
        out.parent.mkdir(parents=True, exist_ok=True)
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)


def _align(rows: list[tuple]) -> list[str]:
    widths = [max(len(str(row[i])) for row in rows) for i in range(len(rows[0]))]
    return ["  ".join(str(cell).ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
