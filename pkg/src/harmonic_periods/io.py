"""Reading and writing task-set files.

CSV (canonical): UTF-8, header ``name,wcet,period``, one task per row, lines
starting with ``#`` ignored. JSON: an array of objects with the keys
``name``, ``wcet`` and ``period``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path

from .errors import EmptyTaskSet, ParseError
from .model import TaskSet, build_taskset

COLUMNS = ("name", "wcet", "period")


def _number(value, locus, key):
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise ParseError(f"{key} is not a number: {value!r}", locus) from None
    if isinstance(value, bool) or not math.isfinite(number):
        raise ParseError(f"{key} is not a finite number: {value!r}", locus)
    return number


def parse_csv(text: str) -> TaskSet:
    lines = [(no, line) for no, line in enumerate(text.splitlines(), 1)
             if line.strip() and not line.lstrip().startswith("#")]
    if not lines:
        raise EmptyTaskSet("task-set file contains no tasks")
    header_no, header = lines[0]
    fields = [f.strip() for f in next(csv.reader([header]))]
    if fields != list(COLUMNS):
        raise ParseError(f"expected header {','.join(COLUMNS)!r}, got {header!r}",
                         f"line {header_no}")
    raw = []
    for no, line in lines[1:]:
        row = [f.strip() for f in next(csv.reader([line]))]
        locus = f"line {no}"
        if len(row) != len(COLUMNS):
            raise ParseError(f"expected {len(COLUMNS)} fields, got {len(row)}", locus)
        raw.append((row[0], _number(row[1], locus, "wcet"), _number(row[2], locus, "period")))
    return build_taskset(raw)


def parse_json(text: str) -> TaskSet:
    try:
        data = json.loads(text) if text.strip() else []
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno}") from None
    if not isinstance(data, list):
        raise ParseError("expected a JSON array of task objects", "document")
    raw = []
    for i, item in enumerate(data):
        locus = f"record {i}"
        if not isinstance(item, dict):
            raise ParseError("expected an object", locus)
        missing = [k for k in COLUMNS if k not in item]
        if missing:
            raise ParseError(f"missing keys {missing}", locus)
        raw.append((str(item["name"]), _number(item["wcet"], locus, "wcet"),
                    _number(item["period"], locus, "period")))
    return build_taskset(raw)


def parse_taskset_file(path, format: str = "auto") -> TaskSet:
    """Load a task set from ``path``; ``format`` is ``csv``, ``json`` or ``auto``.

    ``auto`` picks JSON for a ``.json`` suffix and CSV otherwise.
    """
    path = Path(path)
    if format == "auto":
        format = "json" if path.suffix.lower() == ".json" else "csv"
    text = path.read_text(encoding="utf-8")
    if format == "json":
        return parse_json(text)
    if format == "csv":
        return parse_csv(text)
    raise ValueError(f"unknown task-set format {format!r}")


def _plain(x):
    # 200.0 -> 200 so files stay readable; the parsed value is identical
    return int(x) if float(x).is_integer() else x


def taskset_to_json(taskset: TaskSet) -> str:
    records = [{"name": t.name, "wcet": _plain(t.wcet), "period": _plain(t.period_bound)}
               for t in taskset]
    return json.dumps(records, indent=2)


def taskset_to_csv(taskset: TaskSet) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for t in taskset:
        writer.writerow([t.name, repr(_plain(t.wcet)), repr(_plain(t.period_bound))])
    return buf.getvalue()
