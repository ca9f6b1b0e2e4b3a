"""Phonetic wordplay scoring for word pairs.

Six subscores (edit similarity, alliteration, assonance, stop consonants,
ending match, syllable parity) are weighted and summed into a single total;
the total is the selection key for punch-line candidates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

from .phonetics import (
    ARPABET_VOWELS,
    STOP_CONSONANTS,
    PhoneticLexicon,
    edit_distance,
    normalize_word,
    rhyme_tail,
)


class RejectedPairError(ValueError):
    """The two words are identical after normalization: no incongruity to score."""


@dataclass(frozen=True)
class WordplayConfig:
    w_edit: float = 3.0
    w_allit: float = 1.0
    w_asson: float = 1.0
    w_stop: float = 0.25
    w_end: float = 1.0
    w_syll: float = 0.5
    c_allit_bonus: float = 0.5
    c_end_bonus: float = 0.5
    c_rhyme: float = 3.0
    threshold: float = 3.5
    k_assoc: int = 50
    portmanteau_max_dist: int = 2

    def __post_init__(self) -> None:
        for field in fields(self):
            value = getattr(self, field.name)
            if isinstance(value, float) and not math.isfinite(value):
                raise ValueError(f"{field.name} must be finite, got {value!r}")
        if self.k_assoc < 1:
            raise ValueError("k_assoc must be >= 1")
        if self.portmanteau_max_dist < 1:
            raise ValueError("portmanteau_max_dist must be >= 1")


@dataclass(frozen=True)
class WordplayScore:
    edit_sub: float
    allit_sub: float
    asson_sub: float
    stop_sub: float
    end_sub: float
    syll_sub: float
    total: float


class SoundView:
    """Scoring-ready facts about one side of a pair.

    ``symbols`` is None when no pronunciation is available, in which case the
    spelling carries the edit comparison and the phoneme subscores contribute
    zero. All derived data is precomputed: makers score thousands of pairs.
    """

    __slots__ = (
        "key",
        "spelling",
        "symbols",
        "base",
        "syllables",
        "stressed_vowels",
        "vowels",
        "stop_count",
        "tail",
    )

    def __init__(self, key: str, spelling: str, symbols: tuple[str, ...] | None):
        self.key = key
        self.spelling = spelling
        self.symbols = symbols
        if symbols is None:
            self.base = None
            self.syllables = None
            self.stressed_vowels = frozenset()
            self.vowels = frozenset()
            self.stop_count = 0
            self.tail = ()
        else:
            self.base = tuple(s.rstrip("012") for s in symbols)
            vowel_bases = [b for b in self.base if b in ARPABET_VOWELS]
            self.syllables = len(vowel_bases)
            self.vowels = frozenset(vowel_bases)
            self.stressed_vowels = frozenset(
                s.rstrip("012")
                for s in symbols
                if s.endswith(("1", "2")) and s.rstrip("012") in ARPABET_VOWELS
            )
            self.stop_count = sum(1 for b in self.base if b in STOP_CONSONANTS)
            self.tail = rhyme_tail(symbols)

    def __repr__(self) -> str:
        return f"SoundView({self.key!r}, symbols={self.symbols!r})"


def word_view(lexicon: PhoneticLexicon, word: str) -> SoundView:
    normalized = normalize_word(word)
    pronunciation = lexicon.get(normalized)
    return SoundView(
        key=normalized,
        spelling=normalized,
        symbols=pronunciation.symbols() if pronunciation else None,
    )


def phoneme_view(symbols: tuple[str, ...], spelling: str, key: str | None = None) -> SoundView:
    """View over a raw phoneme sequence (e.g. the replaced prefix of a blend)."""
    return SoundView(key=key or f"<{spelling}>", spelling=spelling, symbols=tuple(symbols))


def _common_prefix_len(a: tuple[str, ...], b: tuple[str, ...]) -> int:
    n = 0
    for x, y in zip(a, b):
        if x != y:
            break
        n += 1
    return n


def _edit_sub(a: SoundView, b: SoundView) -> float:
    if a.base is not None and b.base is not None:
        seq_a, seq_b = a.base, b.base
    else:
        seq_a, seq_b = tuple(a.spelling), tuple(b.spelling)
    longest = max(len(seq_a), len(seq_b))
    if longest == 0:
        return 0.0
    return 1.0 - edit_distance(seq_a, seq_b) / longest


def _allit_sub(a: SoundView, b: SoundView, config: WordplayConfig) -> float:
    if not a.base or not b.base:
        return 0.0
    if a.base[0] != b.base[0] or a.base[0] in ARPABET_VOWELS:
        return 0.0
    matched = _common_prefix_len(a.base, b.base)
    return 1.0 + config.c_allit_bonus * (matched - 1)


def _rhyming(a: SoundView, b: SoundView) -> bool:
    return a.key != b.key and bool(a.tail) and a.tail == b.tail


def _asson_sub(a: SoundView, b: SoundView, config: WordplayConfig) -> float:
    if a.symbols is None or b.symbols is None:
        return 0.0
    if _rhyming(a, b):
        return config.c_rhyme
    shared = (a.stressed_vowels & b.vowels) | (b.stressed_vowels & a.vowels)
    return float(len(shared))


def _end_sub(a: SoundView, b: SoundView, config: WordplayConfig) -> float:
    if not a.base or not b.base:
        return 0.0
    if a.base[-1] != b.base[-1]:
        return 0.0
    matched = _common_prefix_len(a.base[::-1], b.base[::-1])
    return 1.0 + config.c_end_bonus * (matched - 1)


def _syll_sub(a: SoundView, b: SoundView) -> float:
    if a.syllables is None or b.syllables is None:
        return 0.0
    return 1.0 if a.syllables == b.syllables else 0.0


def score_views(a: SoundView, b: SoundView, config: WordplayConfig) -> WordplayScore:
    """Score any two sound views (words or raw phoneme stretches)."""
    edit_sub = _edit_sub(a, b)
    allit_sub = _allit_sub(a, b, config)
    asson_sub = _asson_sub(a, b, config)
    stop_sub = float(a.stop_count + b.stop_count)
    end_sub = _end_sub(a, b, config)
    syll_sub = _syll_sub(a, b)
    total = (
        config.w_edit * edit_sub
        + config.w_allit * allit_sub
        + config.w_asson * asson_sub
        + config.w_stop * stop_sub
        + config.w_end * end_sub
        + config.w_syll * syll_sub
    )
    return WordplayScore(edit_sub, allit_sub, asson_sub, stop_sub, end_sub, syll_sub, total)


def _word_pair(lexicon: PhoneticLexicon, a: str, b: str) -> tuple[SoundView, SoundView]:
    view_a, view_b = word_view(lexicon, a), word_view(lexicon, b)
    if view_a.key == view_b.key:
        raise RejectedPairError(f"identical pair {view_a.key!r}")
    return view_a, view_b


def edit_subscore(a: str, b: str, lexicon: PhoneticLexicon) -> float:
    """Length-normalized phoneme (or spelling) similarity in [0, 1]."""
    view_a, view_b = _word_pair(lexicon, a, b)
    return _edit_sub(view_a, view_b)


def alliteration_subscore(
    a: str, b: str, lexicon: PhoneticLexicon, config: WordplayConfig | None = None
) -> float:
    config = config or WordplayConfig()
    return _allit_sub(word_view(lexicon, a), word_view(lexicon, b), config)


def assonance_subscore(
    a: str, b: str, lexicon: PhoneticLexicon, config: WordplayConfig | None = None
) -> float:
    config = config or WordplayConfig()
    return _asson_sub(word_view(lexicon, a), word_view(lexicon, b), config)


def stop_consonant_subscore(a: str, b: str, lexicon: PhoneticLexicon) -> float:
    return float(word_view(lexicon, a).stop_count + word_view(lexicon, b).stop_count)


def ending_subscore(
    a: str, b: str, lexicon: PhoneticLexicon, config: WordplayConfig | None = None
) -> float:
    config = config or WordplayConfig()
    return _end_sub(word_view(lexicon, a), word_view(lexicon, b), config)


def syllable_subscore(a: str, b: str, lexicon: PhoneticLexicon) -> float:
    return _syll_sub(word_view(lexicon, a), word_view(lexicon, b))


def wordplay_score(
    a: str, b: str, lexicon: PhoneticLexicon, config: WordplayConfig | None = None
) -> WordplayScore:
    """All six subscores and the weighted total for a word pair."""
    config = config or WordplayConfig()
    view_a, view_b = _word_pair(lexicon, a, b)
    return score_views(view_a, view_b, config)
