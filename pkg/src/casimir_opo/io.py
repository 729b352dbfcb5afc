"""Bit-stable serialization: CSV and JSON writers with deterministic float
formatting (shortest round-trip decimal, at most 17 significant digits), LF
line endings, and sorted JSON keys. Identical inputs produce byte-identical
files on every platform.
"""

from __future__ import annotations

import json
import math
import os
from typing import Any, Iterable, Optional

import numpy as np

from .errors import ParseError


def _native(value: Any) -> Any:
    """Convert numpy scalars/arrays to plain Python values."""
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return [_native(v) for v in value.tolist()]
    if isinstance(value, dict):
        return {k: _native(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_native(v) for v in value]
    return value


def format_cell(value: Any) -> str:
    """One CSV cell. Floats use repr (shortest round-trip); None is empty."""
    value = _native(value)
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ParseError(f"non-finite value {value!r} cannot be serialized")
        return repr(value)
    if isinstance(value, int):
        return str(value)
    text = str(value)
    if any(ch in text for ch in (",", "\n", "\r", '"')):
        raise ParseError(f"cell {text!r} would require CSV quoting")
    return text


def csv_text(header: Iterable[str], rows: Iterable[Iterable[Any]]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(format_cell(cell) for cell in row))
    return "\n".join(lines) + "\n"


def json_text(obj: Any) -> str:
    return json.dumps(_native(obj), sort_keys=True, indent=2, allow_nan=False) + "\n"


def write_text(path: str, text: str) -> None:
    try:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise ParseError(f"cannot write {path}: {exc}") from exc


def write_csv(path: str, header: Iterable[str], rows: Iterable[Iterable[Any]]) -> None:
    write_text(path, csv_text(header, rows))


def write_json(path: str, obj: Any) -> None:
    write_text(path, json_text(obj))


def read_csv(path: str) -> tuple:
    """Read one of this package's CSV files: (header, rows of strings)."""
    try:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            content = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    lines = content.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError(f"{path} is empty")
    header = lines[0].split(",")
    rows = [line.split(",") for line in lines[1:]]
    return header, rows


def parse_cell(text: str) -> Optional[float]:
    return None if text == "" else float(text)
