"""Human-readable renderings: compact text and markdown tables.

Tableaux print row by row separated by "/", e.g. "13/2"; skew tableaux mark
inner boxes with "·"; the empty diagram prints as "∅".
"""

from __future__ import annotations

import json
from typing import Any, Iterable, List, Sequence, Tuple

from .insertion import Bijection
from .orbits import ImageReport
from .partitions import Partition
from .signed import SignedYoungDiagram
from .sweeps import TableRow, VerifyResult
from .tableau import SkewTableau, Tableau

EMPTY_MARK = "∅"
INNER_MARK = "·"


def to_json(data: Any) -> str:
    return json.dumps(data, separators=(",", ":"), ensure_ascii=False)


def partition_text(lam: Partition) -> str:
    return str(lam) if lam.parts else EMPTY_MARK


def pair_text(pair: Tuple[Partition, Partition]) -> str:
    return f"{partition_text(pair[0])},{partition_text(pair[1])}"


def tableau_text(t: Tableau) -> str:
    if t.is_empty():
        return EMPTY_MARK
    return "/".join("".join(_entry(v) for v in row) for row in t.rows)


def skew_text(skew: SkewTableau) -> str:
    if not skew.outer.parts:
        return EMPTY_MARK
    return "/".join(
        "".join(INNER_MARK if v is None else _entry(v) for v in row)
        for row in skew.as_rows_with_gaps()
    )


def signed_text(diagram: SignedYoungDiagram) -> str:
    return str(diagram) if diagram.rows else EMPTY_MARK


def bijection_text(w: Bijection) -> str:
    if not len(w):
        return EMPTY_MARK
    return " ".join(f"{a}->{b}" for a, b in w.pairs)


def _entry(v: int) -> str:
    # bracket anything that is not a single digit
    return str(v) if 0 <= v <= 9 else f"[{v}]"


def markdown_table(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join("---" for _ in header) + "|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(cell.replace("|", "\\|") for cell in row) + " |")
    return "\n".join(lines)


TABLE_HEADER = ("τ", "σ", "(RS1,RS2)", "(T1,T2,ν)", "Φ = Ξ_k", "Ξ_s")


def table_cells(row: TableRow) -> List[str]:
    t = row.triple
    return [
        str(row.tau),
        bijection_text(row.sigma),
        f"{tableau_text(row.rs[0])}, {tableau_text(row.rs[1])}",
        f"{tableau_text(t.T1)}, {tableau_text(t.T2)}, {partition_text(t.nu)}",
        pair_text(row.phi),
        signed_text(row.xi_s),
    ]


def table_markdown(rows: Sequence[TableRow]) -> str:
    return markdown_table(TABLE_HEADER, (table_cells(r) for r in rows))


def table_text(rows: Sequence[TableRow]) -> str:
    cells = [list(TABLE_HEADER)] + [table_cells(r) for r in rows]
    widths = [max(len(line[c]) for line in cells) for c in range(len(TABLE_HEADER))]
    return "\n".join(
        "  ".join(value.ljust(widths[c]) for c, value in enumerate(line)).rstrip()
        for line in cells
    )


def verify_text(results: Sequence[VerifyResult]) -> str:
    lines: List[str] = []
    for r in results:
        status = "ok" if r.ok else f"{len(r.mismatches)} mismatches"
        lines.append(f"{r.target} n={r.n}: {r.checked} checked, {status}")
        lines.extend(f"  {m}" for m in r.mismatches)
    return "\n".join(lines)


def image_report_text(report: ImageReport) -> str:
    lines = [f"n={report.n}: {len(report.classes)} orbit classes"]
    for entry in report.classes:
        image = signed_text(entry.xi_s) if entry.xi_s is not None else "?"
        xi_k = pair_text(entry.xi_k) if entry.xi_k is not None else "?"
        suffix = f"  [{entry.error}]" if entry.error else ""
        lines.append(f"  {entry.omega}  {entry.method:<13}  {xi_k}  {image}{suffix}")
    lines.append("maximal: " + ", ".join(signed_text(d) for d in report.maximal))
    for name, value in report.checks.items():
        lines.append(f"{name}: {value}")
    return "\n".join(lines)


def image_report_markdown(report: ImageReport) -> str:
    body = markdown_table(
        ("ω", "method", "Ξ_k", "Ξ_s", "note"),
        (
            (
                str(e.omega),
                e.method,
                pair_text(e.xi_k) if e.xi_k is not None else "?",
                signed_text(e.xi_s) if e.xi_s is not None else "?",
                e.error or "",
            )
            for e in report.classes
        ),
    )
    checks = "\n".join(f"- {name}: {value}" for name, value in report.checks.items())
    maximal = ", ".join(signed_text(d) for d in report.maximal)
    return f"{body}\n\nMaximal images: {maximal}\n\n{checks}"
