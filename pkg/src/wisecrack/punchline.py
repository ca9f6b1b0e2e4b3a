"""Punch-line candidate generation and selection.

Three makers build candidates from the selected keyword pair: juxtaposition
(two adjacent words with strong wordplay), substitution (swap a keyword into
a multi-word association chunk), and portmanteau (blend a short word over the
leading syllables of a longer one). The best candidate above the wordplay
threshold wins.
"""

from __future__ import annotations

from dataclasses import dataclass

from .association import Association, EmbeddingStore, most_similar
from .phonetics import PhoneticLexicon, edit_distance, normalize_word
from .syllables import Hyphenator, syllabify
from .wordplay import (
    WordplayConfig,
    WordplayScore,
    phoneme_view,
    score_views,
    word_view,
)

_KIND_RANK = {"juxtaposition": 0, "substitution": 1, "portmanteau": 2}


@dataclass(frozen=True)
class PunchlineCandidate:
    kind: str
    text: str
    score: WordplayScore
    pair: tuple[str, str]
    host: str | None = None


def _pairing_word(keyword: str) -> str:
    """Single token a (possibly multi-word) keyword contributes to wordplay."""
    words = [normalize_word(w) for w in keyword.split()]
    words = [w for w in words if w]
    return words[-1] if words else ""


def _query_token(store: EmbeddingStore, keyword: str) -> str | None:
    """Vocabulary token to query associations with: the underscore-joined
    surface, its lowercase form, or the keyword's last word."""
    words = keyword.split()
    for token in ("_".join(words), "_".join(w.lower() for w in words), _pairing_word(keyword)):
        if token and token in store:
            return token
    return None


def _associations(
    store: EmbeddingStore, keyword: str, k: int
) -> list[Association]:
    token = _query_token(store, keyword)
    if token is None:
        return []
    return most_similar(store, token, k) or []


def _single_word_list(keyword: str, associations: list[Association]) -> list[str]:
    """The keyword's pairing word followed by its single-word associations."""
    words = [_pairing_word(keyword)]
    words += [a.token for a in associations if not a.is_chunk]
    return list(dict.fromkeys(w for w in words if w))


def make_juxtaposition(
    kw1: str,
    kw2: str,
    store: EmbeddingStore,
    lexicon: PhoneticLexicon,
    config: WordplayConfig,
    exclude: frozenset[str] | set[str] = frozenset(),
) -> PunchlineCandidate | None:
    """Best-scoring cross pair over both keywords' association lists.

    Words already in the topic sentence (``exclude``, normalized) never
    appear in the output.
    """
    if _pairing_word(kw1) == _pairing_word(kw2):
        raise ValueError("keywords must differ")
    list_a = _single_word_list(kw1, _associations(store, kw1, config.k_assoc))
    list_b = _single_word_list(kw2, _associations(store, kw2, config.k_assoc))
    views_b = [
        (b, word_view(lexicon, b))
        for b in list_b
        if normalize_word(b) not in exclude
    ]
    best: tuple[WordplayScore, str, str] | None = None
    for a in list_a:
        norm_a = normalize_word(a)
        if norm_a in exclude:
            continue
        view_a = word_view(lexicon, a)
        for b, view_b in views_b:
            if norm_a == view_b.key:
                continue
            score = score_views(view_a, view_b, config)
            if best is None or score.total > best[0].total:
                best = (score, a, b)
    if best is None:
        return None
    score, a, b = best
    return PunchlineCandidate(
        kind="juxtaposition",
        text=f"{a} {b}".replace("_", " "),
        score=score,
        pair=(a, b),
    )


def _style_like(model: str, word: str) -> str:
    if model.isupper() and len(model) > 1:
        return word.upper()
    if model[:1].isupper():
        return word.capitalize()
    return word


def make_substitution(
    kw1: str,
    kw2: str,
    store: EmbeddingStore,
    lexicon: PhoneticLexicon,
    config: WordplayConfig,
) -> PunchlineCandidate | None:
    """Swap a keyword into the chunk word it plays best against."""
    if _pairing_word(kw1) == _pairing_word(kw2):
        raise ValueError("keywords must differ")
    best: tuple[WordplayScore, str, str, int, str] | None = None
    for keyword, other in ((kw1, kw2), (kw2, kw1)):
        kw_word = _pairing_word(keyword)
        view_kw = word_view(lexicon, kw_word)
        for association in _associations(store, other, config.k_assoc):
            if not association.is_chunk:
                continue
            members = association.token.split("_")
            for position, member in enumerate(members):
                if normalize_word(member) == view_kw.key:
                    continue
                score = score_views(view_kw, word_view(lexicon, member), config)
                if best is None or score.total > best[0].total:
                    best = (score, kw_word, member, position, association.token)
    if best is None:
        return None
    score, kw_word, member, position, chunk = best
    words = chunk.split("_")
    words[position] = _style_like(member, kw_word)
    return PunchlineCandidate(
        kind="substitution",
        text=" ".join(words),
        score=score,
        pair=(kw_word, member),
        host=chunk.replace("_", " "),
    )


def make_portmanteau(
    kw1: str,
    kw2: str,
    store: EmbeddingStore,
    lexicon: PhoneticLexicon,
    config: WordplayConfig,
    hyphenator: Hyphenator,
) -> PunchlineCandidate | None:
    """Blend a short word over the leading syllables of a longer word.

    Qualifying pairs have a short-word pronunciation close to (but not equal
    to) the start of the long word; the candidate's score is the wordplay of
    the short word against the phoneme stretch it replaces.
    """
    if _pairing_word(kw1) == _pairing_word(kw2):
        raise ValueError("keywords must differ")
    pairs: list[tuple[str, str]] = []
    for keyword, other in ((kw1, kw2), (kw2, kw1)):
        other_word = _pairing_word(other)
        for word in _single_word_list(keyword, _associations(store, keyword, config.k_assoc)):
            pairs.append((word, other_word))
    best: tuple[WordplayScore, str, str, str] | None = None
    for x, y in pairs:
        for short, long in ((x, y), (y, x)):
            candidate = _blend(short, long, lexicon, config, hyphenator)
            if candidate is None:
                continue
            score, blend = candidate
            if best is None or score.total > best[0].total:
                best = (score, blend, short, long)
    if best is None:
        return None
    score, blend, short, long = best
    return PunchlineCandidate(
        kind="portmanteau", text=blend, score=score, pair=(short, long), host=long
    )


def _blend(
    short: str,
    long: str,
    lexicon: PhoneticLexicon,
    config: WordplayConfig,
    hyphenator: Hyphenator,
) -> tuple[WordplayScore, str] | None:
    short_norm, long_norm = normalize_word(short), normalize_word(long)
    if short_norm == long_norm:
        return None
    pron_short = lexicon.get(short_norm)
    pron_long = lexicon.get(long_norm)
    if pron_short is None or pron_long is None:
        return None
    if pron_short.syllable_count >= pron_long.syllable_count:
        return None
    prefix = pron_long.symbols()[: len(pron_short.phonemes)]
    distance = edit_distance(
        pron_short.base_symbols(), tuple(s.rstrip("012") for s in prefix)
    )
    if not 0 < distance <= config.portmanteau_max_dist:
        return None
    pieces = syllabify(long_norm, hyphenator)
    replaced = pron_short.syllable_count
    if len(pieces) <= replaced:
        return None
    blend = short_norm + "".join(pieces[replaced:])
    if blend in (short_norm, long_norm):
        return None
    score = score_views(
        word_view(lexicon, short_norm),
        phoneme_view(prefix, "".join(pieces[:replaced])),
        config,
    )
    return score, blend


def select_best(
    candidates: list[PunchlineCandidate], config: WordplayConfig
) -> PunchlineCandidate | None:
    """Highest-total candidate at or above the threshold; None when all fall
    short. Ties prefer juxtaposition, then substitution, then lexicographic text."""
    viable = [c for c in candidates if c.score.total >= config.threshold]
    if not viable:
        return None
    return min(viable, key=lambda c: (-c.score.total, _KIND_RANK[c.kind], c.text))
