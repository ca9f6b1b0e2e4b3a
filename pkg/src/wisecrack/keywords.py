"""Topic keyword extraction and pair selection.

Candidates are nouns (via a bundled noun word list), noun phrases (adjacent
noun runs), and named entities (capitalized runs that do not open the
sentence). Stopworded and unembeddable candidates are dropped; the selected
pair is the one with least cosine similarity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .association import EmbeddingStore, phrase_vector
from .phonetics import normalize_word

_TOKEN = re.compile(r"[^\W_]+(?:'[^\W_]+)*", re.UNICODE)


@dataclass(frozen=True)
class KeywordCandidate:
    surface: str
    normalized: str
    span: tuple[int, int]
    kind: str  # noun | noun_phrase | named_entity


@dataclass(frozen=True)
class TopicAnalysis:
    sentence: str
    tokens: tuple[str, ...]
    candidates: tuple[KeywordCandidate, ...]
    selected: tuple[KeywordCandidate, KeywordCandidate] | None
    pair_similarity: float | None


def tokenize(sentence: str) -> list[str]:
    return _TOKEN.findall(sentence)


def candidate_vector(store: EmbeddingStore, candidate: KeywordCandidate) -> np.ndarray | None:
    """Embedding vector for a candidate: surface casing first, lowercase fallback."""
    surface_words = candidate.surface.split()
    vector = phrase_vector(store, surface_words)
    if vector is None:
        vector = phrase_vector(store, [w.lower() for w in surface_words])
    return vector


def _make_candidate(tokens: list[str], start: int, end: int, kind: str) -> KeywordCandidate:
    surface = " ".join(tokens[start:end])
    normalized = " ".join(normalize_word(t) for t in tokens[start:end])
    return KeywordCandidate(surface=surface, normalized=normalized, span=(start, end), kind=kind)


def extract_candidates(
    sentence: str,
    stopwords: frozenset[str] | set[str],
    noun_lexicon: frozenset[str] | set[str],
    store: EmbeddingStore,
) -> list[KeywordCandidate]:
    tokens = tokenize(sentence)
    raw: list[KeywordCandidate] = []
    covered: set[int] = set()

    # Named entities: maximal capitalized runs that start after the first token.
    i = 1
    while i < len(tokens):
        if tokens[i][:1].isupper():
            j = i
            while j < len(tokens) and tokens[j][:1].isupper():
                j += 1
            raw.append(_make_candidate(tokens, i, j, "named_entity"))
            covered.update(range(i, j))
            i = j
        else:
            i += 1

    # Nouns and adjacent-noun phrases outside entity spans.
    i = 0
    while i < len(tokens):
        if i not in covered and normalize_word(tokens[i]) in noun_lexicon:
            j = i
            while j < len(tokens) and j not in covered and normalize_word(tokens[j]) in noun_lexicon:
                raw.append(_make_candidate(tokens, j, j + 1, "noun"))
                j += 1
            if j - i >= 2:
                raw.append(_make_candidate(tokens, i, j, "noun_phrase"))
            i = j
        else:
            i += 1

    def keep(candidate: KeywordCandidate) -> bool:
        if not candidate.normalized or candidate.normalized in stopwords:
            return False
        return candidate_vector(store, candidate) is not None

    candidates = [c for c in raw if keep(c)]
    if len(candidates) < 2:
        # Low-yield fallback: any embeddable non-stopword token counts as a noun.
        spans = {c.span for c in candidates}
        for i, token in enumerate(tokens):
            candidate = _make_candidate(tokens, i, i + 1, "noun")
            if candidate.span in spans:
                continue
            if keep(candidate):
                candidates.append(candidate)
    candidates.sort(key=lambda c: (c.span, c.kind))
    return candidates


def select_keyword_pair(
    candidates: list[KeywordCandidate], store: EmbeddingStore
) -> tuple[KeywordCandidate, KeywordCandidate, float] | None:
    """Pair of candidates with least cosine similarity, in sentence order.

    Ties break toward the earliest spans; None when fewer than two candidates
    have vectors.
    """
    ordered = sorted(candidates, key=lambda c: (c.span, c.kind))
    vectors = [(c, candidate_vector(store, c)) for c in ordered]
    vectors = [(c, v) for c, v in vectors if v is not None]
    best: tuple[KeywordCandidate, KeywordCandidate, float] | None = None
    for i, (first, vec_first) in enumerate(vectors):
        for second, vec_second in vectors[i + 1:]:
            sim = float(np.dot(vec_first, vec_second))
            if best is None or sim < best[2]:
                best = (first, second, sim)
    return best


def analyze_topic(
    sentence: str,
    stopwords: frozenset[str] | set[str],
    noun_lexicon: frozenset[str] | set[str],
    store: EmbeddingStore,
) -> TopicAnalysis:
    tokens = tokenize(sentence)
    candidates = extract_candidates(sentence, stopwords, noun_lexicon, store)
    picked = select_keyword_pair(candidates, store)
    if picked is None:
        return TopicAnalysis(sentence, tuple(tokens), tuple(candidates), None, None)
    first, second, sim = picked
    return TopicAnalysis(sentence, tuple(tokens), tuple(candidates), (first, second), sim)
