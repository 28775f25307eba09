"""Deterministic CSV and JSON emission.

Identical inputs must produce byte-identical artifacts: fixed column orders,
'.' decimals via shortest-repr float formatting, '\\n' line endings, sorted
JSON keys, and no timestamp unless explicitly stamped.
"""

from __future__ import annotations

import datetime as _dt
import json
import math
import numbers
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

ARTIFACT = "primelab"
ARTIFACT_VERSION = "0.1.0"


def format_cell(value: Any) -> str:
    """One CSV cell: shortest-repr floats, lowercase booleans, plain ints."""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return repr(float(value))  # float() strips numpy scalar wrappers
    if isinstance(value, (list, tuple)):
        return ";".join(format_cell(v) for v in value)  # keep the cell comma-free
    return str(value)


def comment_lines(config: Mapping[str, Any], stamp: bool = False) -> list[str]:
    """Header comments: artifact version, config echo, optional timestamp."""
    echo = " ".join(f"{k}={format_cell(v)}" for k, v in sorted(config.items()))
    lines = [f"# {ARTIFACT} {ARTIFACT_VERSION}", f"# config: {echo}"]
    if stamp:
        now = _dt.datetime.now(_dt.timezone.utc).replace(microsecond=0)
        lines.append(f"# generated: {now.isoformat()}")
    return lines


def render_csv(
    columns: Sequence[str],
    rows: Iterable[Sequence[Any]],
    config: Mapping[str, Any],
    stamp: bool = False,
    extra_comments: Sequence[str] = (),
) -> str:
    """Full CSV text: '#' comment header, column row, data rows."""
    lines = comment_lines(config, stamp)
    lines.extend(f"# {note}" for note in extra_comments)
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(format_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def _jsonable(value: Any) -> Any:
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, numbers.Integral):
        return int(value)  # covers numpy integer scalars
    if isinstance(value, numbers.Real):
        value = float(value)
        return None if not math.isfinite(value) else value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def render_json(report: Any, config: Mapping[str, Any], stamp: bool = False) -> str:
    """Full JSON text with version and config echo; non-finite floats become
    null so the artifact stays strictly standard JSON."""
    doc: dict[str, Any] = {
        "artifact": ARTIFACT,
        "version": ARTIFACT_VERSION,
        "config": {k: format_cell(v) for k, v in config.items()},
        "report": _jsonable(report),
    }
    if stamp:
        now = _dt.datetime.now(_dt.timezone.utc).replace(microsecond=0)
        doc["generated"] = now.isoformat()
    return json.dumps(doc, sort_keys=True, indent=2, allow_nan=False) + "\n"
