"""Pronunciation lexicon and phoneme-level primitives.

Entries follow the plain-text ARPAbet dictionary layout: one ``WORD  PH1 PH2``
line per entry, ``;;;`` comment lines, and ``WORD(2)``-style suffixes marking
alternate pronunciations (only the first pronunciation per word is kept).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Iterator

ARPABET_VOWELS = frozenset(
    "AA AE AH AO AW AY EH ER EY IH IY OW OY UH UW".split()
)
ARPABET_CONSONANTS = frozenset(
    "B CH D DH F G HH JH K L M N NG P R S SH T TH V W Y Z ZH".split()
)
ARPABET_SYMBOLS = ARPABET_VOWELS | ARPABET_CONSONANTS

STOP_CONSONANTS = frozenset({"B", "D", "G", "K", "P", "T"})

_VARIANT_SUFFIX = re.compile(r"\(\d+\)$")
_EDGE_JUNK = re.compile(r"^[^0-9A-Za-z']+|[^0-9A-Za-z']+$")


class LexiconFormatError(ValueError):
    """Raised when a dictionary line cannot be parsed."""


@dataclass(frozen=True)
class Phoneme:
    """One ARPAbet symbol; vowels carry a stress digit (0, 1, or 2)."""

    symbol: str
    is_vowel: bool
    stress: int | None

    @property
    def base(self) -> str:
        """Symbol with any stress digit removed."""
        return self.symbol.rstrip("012")

    @classmethod
    def parse(cls, symbol: str) -> "Phoneme":
        base = symbol.rstrip("012")
        if base in ARPABET_VOWELS:
            digit = symbol[len(base):]
            return cls(symbol=symbol, is_vowel=True, stress=int(digit) if digit else 0)
        if base in ARPABET_CONSONANTS and base == symbol:
            return cls(symbol=symbol, is_vowel=False, stress=None)
        raise LexiconFormatError(f"unknown phoneme symbol {symbol!r}")


@dataclass(frozen=True)
class Pronunciation:
    word: str
    phonemes: tuple[Phoneme, ...]
    syllable_count: int

    @classmethod
    def from_symbols(cls, word: str, symbols: Iterable[str]) -> "Pronunciation":
        phonemes = tuple(Phoneme.parse(s) for s in symbols)
        return cls(
            word=word,
            phonemes=phonemes,
            syllable_count=sum(1 for p in phonemes if p.is_vowel),
        )

    def symbols(self) -> tuple[str, ...]:
        return tuple(p.symbol for p in self.phonemes)

    def base_symbols(self) -> tuple[str, ...]:
        """Phoneme symbols with stress digits stripped."""
        return tuple(p.base for p in self.phonemes)


class PhoneticLexicon:
    """Immutable word -> primary pronunciation map."""

    def __init__(self, entries: dict[str, Pronunciation]):
        self._entries = entries

    @property
    def size(self) -> int:
        return len(self._entries)

    def get(self, word: str) -> Pronunciation | None:
        return self._entries.get(word)

    def __contains__(self, word: str) -> bool:
        return word in self._entries

    def words(self) -> Iterator[str]:
        return iter(self._entries)


def normalize_word(text: str) -> str:
    """Lowercase and strip leading/trailing non-alphanumerics (apostrophes kept)."""
    return _EDGE_JUNK.sub("", text).lower()


def _open_lines(source: str | Path | IO[str]) -> Iterable[str]:
    if hasattr(source, "read"):
        return source  # type: ignore[return-value]
    return Path(source).read_text(encoding="utf-8").splitlines()


def load_lexicon(source: str | Path | IO[str]) -> PhoneticLexicon:
    """Parse an ARPAbet dictionary stream, keeping the first pronunciation per word."""
    entries: dict[str, Pronunciation] = {}
    for line_no, raw in enumerate(_open_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith(";;;"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise LexiconFormatError(f"line {line_no}: expected 'WORD PH1 ...', got {raw!r}")
        head, *symbols = parts
        word = _VARIANT_SUFFIX.sub("", head).lower()
        if not word or word in entries:
            continue
        try:
            entries[word] = Pronunciation.from_symbols(word, symbols)
        except LexiconFormatError as exc:
            raise LexiconFormatError(f"line {line_no}: {exc}") from None
    return PhoneticLexicon(entries)


def pronounce(lexicon: PhoneticLexicon, word: str) -> Pronunciation | None:
    """Primary pronunciation for a single word, or None when out of vocabulary."""
    if any(ch.isspace() for ch in word.strip()):
        raise ValueError(f"multi-word input {word!r}; split before lookup")
    normalized = normalize_word(word)
    if not normalized:
        raise ValueError(f"nothing left of {word!r} after normalization")
    return lexicon.get(normalized)


def edit_distance(a: Iterable, b: Iterable) -> int:
    """Levenshtein distance with unit insert/delete/substitute costs."""
    seq_a, seq_b = tuple(a), tuple(b)
    if len(seq_a) < len(seq_b):
        seq_a, seq_b = seq_b, seq_a
    previous = list(range(len(seq_b) + 1))
    for i, sym_a in enumerate(seq_a, start=1):
        current = [i]
        for j, sym_b in enumerate(seq_b, start=1):
            cost = 0 if sym_a == sym_b else 1
            current.append(
                min(previous[j] + 1, current[j - 1] + 1, previous[j - 1] + cost)
            )
        previous = current
    return previous[-1]


def rhyme_tail(symbols: Iterable[str]) -> tuple[str, ...]:
    """Stress-stripped phonemes from the last primary-stressed vowel onward.

    Falls back to the last vowel of any stress when no primary stress exists.
    """
    syms = tuple(symbols)
    anchor = None
    last_vowel = None
    for i, sym in enumerate(syms):
        base = sym.rstrip("012")
        if base in ARPABET_VOWELS:
            last_vowel = i
            if sym.endswith("1"):
                anchor = i
    start = anchor if anchor is not None else last_vowel
    if start is None:
        return ()
    return tuple(sym.rstrip("012") for sym in syms[start:])


def rhymes(a: Pronunciation, b: Pronunciation) -> bool:
    """True when both tails from the last primary-stressed vowel match."""
    if a.word == b.word:
        return False
    tail_a = rhyme_tail(a.symbols())
    tail_b = rhyme_tail(b.symbols())
    return bool(tail_a) and tail_a == tail_b
