"""Reading ``group,value`` tables."""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .errors import DomainError

DELIMITERS = (",", "\t", ";")


class TableError(DomainError):
    """Malformed input table; the message carries the offending line number."""


@dataclass(frozen=True)
class InputTable:
    rows: tuple[tuple[str, float], ...]
    source: str = "<input>"

    def labels(self) -> list[str]:
        seen: list[str] = []
        for label, _ in self.rows:
            if label not in seen:
                seen.append(label)
        return seen

    def groups(self) -> dict[str, list[float]]:
        out: dict[str, list[float]] = {label: [] for label in self.labels()}
        for label, value in self.rows:
            out[label].append(value)
        return out

    def two_groups(self) -> tuple[tuple[str, list[float]], tuple[str, list[float]]]:
        """The two groups in order of first appearance."""
        groups = self.groups()
        if len(groups) != 2:
            raise TableError(f"{self.source}: expected exactly two groups, found {len(groups)}"
                             + (f" ({', '.join(groups)})" if groups else ""))
        (la, va), (lb, vb) = groups.items()
        return (la, va), (lb, vb)


def _detect_delimiter(header: str) -> str:
    for d in DELIMITERS:
        if d in header:
            return d
    raise TableError("line 1: header must be 'group,value' (comma, tab or semicolon delimited)")


def parse_table(text: str, source: str = "<input>") -> InputTable:
    lines = text.splitlines()
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx == len(lines):
        raise TableError(f"{source}: empty input")
    delim = _detect_delimiter(lines[idx])
    header = [h.strip().lower() for h in lines[idx].split(delim)]
    if header != ["group", "value"]:
        raise TableError(f"{source}: line {idx + 1}: header must be 'group{delim}value' (got {lines[idx]!r})")
    rows = []
    for lineno, line in enumerate(lines[idx + 1:], start=idx + 2):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = [p.strip() for p in line.split(delim)]
        if len(parts) != 2:
            raise TableError(f"{source}: line {lineno}: expected 2 fields, got {len(parts)}")
        label, raw = parts
        if not label:
            raise TableError(f"{source}: line {lineno}: empty group label")
        try:
            value = float(raw)
        except ValueError:
            raise TableError(f"{source}: line {lineno}: cannot parse {raw!r} as a number") from None
        if not math.isfinite(value):
            raise TableError(f"{source}: line {lineno}: value must be finite (got {raw!r})")
        rows.append((label, value))
    if not rows:
        raise TableError(f"{source}: no data rows")
    return InputTable(tuple(rows), source)


def read_table(path: str | Path) -> InputTable:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise TableError(f"{p}: cannot read ({exc.strerror})") from None
    return parse_table(text, str(p))
