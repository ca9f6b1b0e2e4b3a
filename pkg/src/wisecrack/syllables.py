"""Orthographic syllable division via Liang hyphenation patterns."""

from __future__ import annotations

import re
from pathlib import Path
from typing import IO

_VOWEL_RUN = re.compile(r"[aeiouy]+", re.IGNORECASE)


class Hyphenator:
    """Liang pattern matcher: patterns are stored in a character trie whose
    leaves hold the inter-letter priority points."""

    def __init__(self, patterns: list[str], exceptions: list[str]):
        self._tree: dict = {}
        for pattern in patterns:
            chars = re.sub(r"\d", "", pattern)
            points = [int(d or 0) for d in re.split(r"[.a-z]", pattern)]
            node = self._tree
            for ch in chars:
                node = node.setdefault(ch, {})
            node[None] = points
        self._exceptions: dict[str, list[int]] = {}
        for entry in exceptions:
            word = entry.replace("-", "")
            self._exceptions[word] = [0] + [
                int(ch == "-") for ch in re.split(r"[a-z]", entry)
            ]

    def pieces(self, word: str) -> list[str]:
        # Liang's scheme never breaks very short words or inside the first
        # and last two letters.
        if len(word) <= 4:
            return [word]
        lowered = word.lower()
        if lowered in self._exceptions:
            points = self._exceptions[lowered]
        else:
            work = f".{lowered}."
            points = [0] * (len(work) + 1)
            for i in range(len(work)):
                node = self._tree
                for ch in work[i:]:
                    if ch not in node:
                        break
                    node = node[ch]
                    if None in node:
                        for j, p in enumerate(node[None]):
                            points[i + j] = max(points[i + j], p)
            points[1] = points[2] = points[-2] = points[-3] = 0
        pieces = [""]
        for ch, point in zip(word, points[2:]):
            pieces[-1] += ch
            if point % 2:
                pieces.append("")
        return pieces


def load_hyphenation_patterns(source: str | Path | IO[str]) -> Hyphenator:
    """Read a pattern file: whitespace-separated patterns, '%' comments,
    '!'-prefixed hyphenated exception words."""
    if hasattr(source, "read"):
        text = source.read()  # type: ignore[union-attr]
    else:
        text = Path(source).read_text(encoding="utf-8")
    patterns: list[str] = []
    exceptions: list[str] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("%"):
            continue
        for token in line.split():
            if token.startswith("!"):
                exceptions.append(token[1:])
            else:
                patterns.append(token)
    return Hyphenator(patterns, exceptions)


def _vowel_split(word: str) -> list[str]:
    """Split before the consonant onset of every vowel run after the first."""
    runs = list(_VOWEL_RUN.finditer(word))
    if len(runs) < 2:
        return [word]
    cuts = []
    previous_end = runs[0].end()
    for run in runs[1:]:
        cuts.append(previous_end if previous_end < run.start() else run.start())
        previous_end = run.end()
    pieces = []
    start = 0
    for cut in cuts:
        pieces.append(word[start:cut])
        start = cut
    pieces.append(word[start:])
    return [p for p in pieces if p]


def syllabify(word: str, hyphenator: Hyphenator) -> list[str]:
    """Divide a word into orthographic syllables; pieces always rejoin to the word."""
    if not word or not word.isalpha():
        return [word]
    pieces = hyphenator.pieces(word)
    if len(pieces) == 1 and len(list(_VOWEL_RUN.finditer(word))) >= 2:
        pieces = _vowel_split(word)
    return pieces
