"""Word-embedding association engine.

Loads a word2vec interchange file (text or binary), stores unit-normalized
vectors, and answers cosine-similarity and nearest-neighbor queries. Tokens
containing underscores are multi-word chunks; they render with spaces.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np


class EmbeddingFormatError(ValueError):
    """Raised when an embedding file row cannot be parsed."""


@dataclass(frozen=True)
class Association:
    token: str
    similarity: float
    is_chunk: bool

    @property
    def surface(self) -> str:
        return self.token.replace("_", " ")


class EmbeddingStore:
    """Immutable token -> unit vector table; cosine similarity is a dot product."""

    def __init__(self, vocabulary: list[str], vectors: np.ndarray):
        self.vocabulary = vocabulary
        self.vectors = vectors
        self.dimension = int(vectors.shape[1]) if len(vectors) else 0
        self._index = {token: i for i, token in enumerate(vocabulary)}

    @property
    def size(self) -> int:
        return len(self.vocabulary)

    def __contains__(self, token: str) -> bool:
        return token in self._index

    def vector(self, token: str) -> np.ndarray | None:
        i = self._index.get(token)
        return None if i is None else self.vectors[i]


def _normalize_rows(
    tokens: list[str], rows: list[np.ndarray], dimension: int
) -> EmbeddingStore:
    vocabulary: list[str] = []
    kept: list[np.ndarray] = []
    seen: set[str] = set()
    for token, row in zip(tokens, rows):
        if token in seen:
            continue
        seen.add(token)
        vocabulary.append(token)
        kept.append(row)
    matrix = np.vstack(kept) if kept else np.zeros((0, dimension))
    norms = np.linalg.norm(matrix, axis=1, keepdims=True)
    matrix = matrix / norms
    return EmbeddingStore(vocabulary, matrix)


def load_embeddings(source: str | Path, binary: bool | None = None) -> EmbeddingStore:
    """Parse a word2vec-layout embedding file into a normalized store.

    The format is auto-detected from the ``.bin`` extension unless ``binary``
    is given explicitly.
    """
    path = Path(source)
    if binary is None:
        binary = path.suffix == ".bin"
    return _load_binary(path) if binary else _load_text(path)


def _check_row(row: np.ndarray, dimension: int, index: int) -> None:
    if row.shape[0] != dimension:
        raise EmbeddingFormatError(
            f"row {index}: expected {dimension} values, got {row.shape[0]}"
        )
    if not np.any(row):
        raise EmbeddingFormatError(f"row {index}: zero vector")


def _load_text(path: Path) -> EmbeddingStore:
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines:
        raise EmbeddingFormatError("empty embedding file")
    header = lines[0].split()
    if len(header) != 2:
        raise EmbeddingFormatError(f"bad header {lines[0]!r}; expected 'count dim'")
    dimension = int(header[1])
    tokens: list[str] = []
    rows: list[np.ndarray] = []
    for index, line in enumerate(lines[1:], start=1):
        if not line.strip():
            continue
        parts = line.split()
        token, values = parts[0], parts[1:]
        try:
            row = np.array([float(v) for v in values])
        except ValueError as exc:
            raise EmbeddingFormatError(f"row {index}: {exc}") from None
        _check_row(row, dimension, index)
        tokens.append(token)
        rows.append(row)
    return _normalize_rows(tokens, rows, dimension)


def _load_binary(path: Path) -> EmbeddingStore:
    data = path.read_bytes()
    newline = data.index(b"\n")
    count, dimension = (int(x) for x in data[:newline].split())
    offset = newline + 1
    tokens: list[str] = []
    rows: list[np.ndarray] = []
    for index in range(1, count + 1):
        space = data.index(b" ", offset)
        token = data[offset:space].decode("utf-8").strip()
        offset = space + 1
        row = np.frombuffer(data, dtype="<f4", count=dimension, offset=offset).astype(float)
        offset += 4 * dimension
        _check_row(row, dimension, index)
        tokens.append(token)
        rows.append(row)
    return _normalize_rows(tokens, rows, dimension)


def write_text_embeddings(path: str | Path, vocabulary: list[str], vectors: np.ndarray) -> None:
    """Emit the text interchange layout (used by the fixture build script)."""
    lines = [f"{len(vocabulary)} {vectors.shape[1]}"]
    for token, row in zip(vocabulary, vectors):
        lines.append(token + " " + " ".join(f"{v:.8f}" for v in row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def similarity(store: EmbeddingStore, a: str, b: str) -> float | None:
    """Cosine similarity of two stored tokens, or None when either is missing."""
    va, vb = store.vector(a), store.vector(b)
    if va is None or vb is None:
        return None
    return float(np.dot(va, vb))


def most_similar(store: EmbeddingStore, token: str, k: int) -> list[Association] | None:
    """Top-k nearest vocabulary tokens by cosine, excluding the query itself.

    Ties break on ascending vocabulary index; None for out-of-vocabulary queries.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    query = store.vector(token)
    if query is None:
        return None
    sims = store.vectors @ query
    order = np.argsort(-sims, kind="stable")
    results: list[Association] = []
    query_index = store.vocabulary.index(token)
    for i in order:
        if i == query_index:
            continue
        name = store.vocabulary[i]
        results.append(Association(name, float(sims[i]), "_" in name))
        if len(results) == k:
            break
    return results


def phrase_vector(store: EmbeddingStore, words: list[str]) -> np.ndarray | None:
    """Vector for a multi-word phrase: the stored chunk if present, else the
    normalized mean of in-vocabulary member vectors."""
    if not words:
        raise ValueError("words must be non-empty")
    chunk = "_".join(words)
    stored = store.vector(chunk)
    if stored is not None:
        return stored
    members = [store.vector(w) for w in words]
    present = [v for v in members if v is not None]
    if not present:
        return None
    mean = np.mean(present, axis=0)
    norm = np.linalg.norm(mean)
    if norm == 0:
        return None
    return mean / norm
