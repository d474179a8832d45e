"""Batch analysis of diagram files; reports are emitted in input order."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator

from .bridges import bridge_decomposition
from .certify import INCONCLUSIVE, NONSPLIT, PRIME, SCHEMA, SPLIT, certify, diagram_from_source
from .codes import DiagramError, detect_format
from .certify import invariant_summary


@dataclass
class Options:
    fmt: str | None = None
    assume_nontrivial: bool = False
    jobs: int = 1
    mode: str = "analyze"  # analyze | invariants | bridges


def read_records(text: str, fmt: str | None = None) -> list[dict]:
    """Split a file into records: a JSON array, or one diagram per non-blank line.

    Lines starting with ``#`` are comments.
    """
    stripped = text.strip()
    if stripped.startswith("[") and fmt in (None, "json"):
        items = json.loads(stripped)
        return [{"format": "json", "record": item, "index": i} for i, item in enumerate(items)]
    records = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        records.append({"format": fmt or detect_format(line), "record": line,
                        "line": lineno, "index": len(records)})
    return records


def analyze_record(source: dict, options: Options) -> dict:
    try:
        d = diagram_from_source(source)
    except (DiagramError, ValueError, TypeError, KeyError) as exc:
        return {"input": source, "error": str(exc), "schema": SCHEMA}
    if options.mode == "invariants":
        return {"input": source, "invariants": invariant_summary(d), "schema": SCHEMA}
    if options.mode == "bridges":
        try:
            bridges = bridge_decomposition(d).to_json()
        except DiagramError as exc:
            bridges = {"n": None, "note": str(exc), "crossing_free_components": d.free_loops}
        return {"input": source, "bridges": bridges, "schema": SCHEMA}
    return certify(d, options.assume_nontrivial).to_json(source)


def _analyze(args):
    return analyze_record(*args)


def analyze_batch(text: str, options: Options) -> Iterator[dict]:
    """Yield one report per record and a final ``{"summary": ...}`` object."""
    records = read_records(text, options.fmt)
    work = [(r, options) for r in records]
    if options.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=options.jobs) as pool:
            reports = list(pool.map(_analyze, work, chunksize=4))
    else:
        reports = [_analyze(w) for w in work]
    yield from reports
    yield {"summary": summarize(reports)}


def summarize(reports: list[dict]) -> dict:
    summary = {"records": len(reports), "errors": 0, "analyzed": 0}
    if any("splitness" in r for r in reports) or not reports:
        summary.update({NONSPLIT: 0, SPLIT: 0, PRIME: 0, INCONCLUSIVE + "-splitness": 0})
    for r in reports:
        if "error" in r:
            summary["errors"] += 1
            continue
        summary["analyzed"] += 1
        if "splitness" in r:
            key = r["splitness"] if r["splitness"] != INCONCLUSIVE else INCONCLUSIVE + "-splitness"
            summary[key] += 1
            if r["primeness"] == PRIME:
                summary[PRIME] += 1
    return summary


def format_text(report: dict) -> str:
    if "summary" in report:
        return "summary: " + ", ".join(f"{k}={v}" for k, v in sorted(report["summary"].items()))
    src = report["input"]
    where = f"line {src['line']}" if "line" in src else f"record {src['index']}"
    if "error" in report:
        return f"{where}: ERROR {report['error']}"
    if "bridges" in report:
        b = report["bridges"]
        return f"{where}: bridge number {b['n']}"
    inv = report["invariants"]
    head = (f"{where}: c={inv['crossings']} k={inv['components']} writhe={inv['writhe']} "
            f"s={inv['seifert_circles']} chi={inv['euler_characteristic']} "
            f"bridges={inv['bridge_number']}")
    if "splitness" not in report:
        return head
    w = report["diagram_prime"].get("witness")
    cut = f" cut={w['arc_labels']}:{w['side_crossings']}" if w else ""
    return (f"{head}\n  positive={report['positivity']['positive']} "
            f"connected={report['connectivity']} diagram_prime={report['diagram_prime']['prime']}{cut} "
            f"nontrivial={report['nontrivial']['status']}\n"
            f"  splitness={report['splitness']} primeness={report['primeness']}")


def render(reports: Iterator[dict], as_json: bool, write: Callable[[str], None]) -> bool:
    """Write reports; returns True iff any record failed to parse."""
    failed = False
    for report in reports:
        failed = failed or "error" in report
        write(json.dumps(report, sort_keys=True, separators=(",", ":")) if as_json
              else format_text(report))
    return failed
