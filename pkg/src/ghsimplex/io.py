"""Reading and writing spaces.

JSON: ``{"labels": [...], "dist": [[...], ...]}`` with entries as numbers,
``"p/q"`` strings or decimal strings; ``labels`` is optional.

CSV: a square matrix, optionally preceded by a header row of labels.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .errors import ParseError
from .metric import FiniteMetricSpace, format_rational, to_rational, validate


def loads_space_json(text: str) -> FiniteMetricSpace:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "dist" not in doc:
        raise ParseError('space JSON needs a "dist" matrix')
    return validate(doc["dist"], doc.get("labels"))


def loads_space_csv(text: str) -> FiniteMetricSpace:
    rows = [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    if not rows:
        raise ParseError("empty CSV")
    labels = None
    try:
        [to_rational(c) for c in rows[0]]
    except ParseError:
        labels = [c.strip() for c in rows[0]]
        rows = rows[1:]
    return validate([[c.strip() for c in r] for r in rows], labels)


def load_space(path) -> FiniteMetricSpace:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    if path.suffix.lower() == ".csv":
        return loads_space_csv(text)
    return loads_space_json(text)


def space_to_dict(X: FiniteMetricSpace) -> dict:
    return {
        "labels": list(X.labels),
        "dist": [[format_rational(q) for q in row] for row in X.dist],
    }


def dump_space_json(X: FiniteMetricSpace) -> str:
    return json.dumps(space_to_dict(X), indent=1) + "\n"


def dump_space_csv(X: FiniteMetricSpace) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(X.labels)
    for row in X.dist:
        w.writerow([format_rational(q) for q in row])
    return buf.getvalue()
