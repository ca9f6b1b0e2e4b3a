"""Line-oriented word/template list files: one entry per line, '#' comments."""

from __future__ import annotations

from pathlib import Path
from typing import IO


def load_line_list(source: str | Path | IO[str]) -> list[str]:
    if hasattr(source, "read"):
        text = source.read()  # type: ignore[union-attr]
    else:
        text = Path(source).read_text(encoding="utf-8")
    entries = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            entries.append(line)
    return entries


def load_word_set(source: str | Path | IO[str]) -> frozenset[str]:
    return frozenset(load_line_list(source))
