"""Readers for the simulator's CSV and JSON artifacts."""

import csv
import json
import math
import os

from .errors import ParseError, SchemaError


class Table:
    """A parsed CSV: ordered column names and one list per column.

    Numeric cells become floats; anything non-numeric (verdict strings,
    error messages, empty cells) stays a string.
    """

    def __init__(self, path: str, columns: list[str], data: dict[str, list]):
        self.path = path
        self.columns = columns
        self.data = data

    def __len__(self) -> int:
        return len(self.data[self.columns[0]]) if self.columns else 0

    def column(self, name: str) -> list:
        self.require_columns([name])
        return self.data[name]

    def require_columns(self, names: list[str]) -> None:
        missing = [name for name in names if name not in self.data]
        if missing:
            raise SchemaError(
                f"{self.path}: missing required column(s) {', '.join(missing)}; "
                f"found {', '.join(self.columns) or 'none'}"
            )

    def require_rows(self) -> None:
        if len(self) == 0:
            raise SchemaError(f"{self.path}: no data rows")

    def floats(self, name: str) -> list[float]:
        values = self.column(name)
        out = []
        for i, value in enumerate(values):
            if not isinstance(value, float):
                raise SchemaError(
                    f"{self.path}: column {name} row {i + 1} is not numeric: {value!r}"
                )
            out.append(value)
        return out


def _cell(text: str):
    if text == "":
        return ""
    try:
        value = float(text)
    except ValueError:
        return text
    return value


def read_table(path: str) -> Table:
    """Read a CSV artifact; missing/empty/malformed files raise ParseError."""
    if not os.path.exists(path):
        raise ParseError(f"input file does not exist: {path}")
    try:
        with open(path, newline="", encoding="utf-8") as handle:
            rows = list(csv.reader(handle))
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise ParseError(f"{path}: empty file (no header row)")
    header = rows[0]
    if len(set(header)) != len(header):
        raise ParseError(f"{path}: duplicate column names in header")
    data = {name: [] for name in header}
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise ParseError(
                f"{path}: line {lineno} has {len(row)} cells, expected {len(header)}"
            )
        for name, text in zip(header, row):
            data[name].append(_cell(text))
    return Table(path, header, data)


def read_json(path: str) -> dict:
    """Read a JSON artifact; must hold a single object."""
    if not os.path.exists(path):
        raise ParseError(f"input file does not exist: {path}")
    try:
        with open(path, encoding="utf-8") as handle:
            payload = json.load(handle)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise SchemaError(f"{path}: expected a JSON object, got {type(payload).__name__}")
    return payload


def positive_number(payload: dict, path: str, key: str) -> float:
    """Fetch a strictly positive finite number from a JSON artifact."""
    if key not in payload:
        raise SchemaError(f"{path}: missing required key {key}")
    value = payload[key]
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise SchemaError(f"{path}: key {key} is not a number: {value!r}")
    value = float(value)
    if not (math.isfinite(value) and value > 0.0):
        raise SchemaError(f"{path}: key {key} must be a positive finite number, got {value!r}")
    return value
