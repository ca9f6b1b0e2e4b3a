"""Final joke-response assembly: keyword echo, filler, angle, punch line."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field

from .angle import AngleConfigError, AngleResult
from .keywords import TopicAnalysis
from .punchline import PunchlineCandidate

_WHITESPACE = re.compile(r"\s+")
_TERMINAL = (".", "!", "?")


@dataclass(frozen=True)
class JokeResponse:
    text: str
    responded: bool
    keywords: tuple[str, str] | None = None
    filler: str | None = None
    angle: str | None = None
    punchline: str | None = None
    candidates: tuple[PunchlineCandidate, ...] = field(default_factory=tuple)


def _capitalize_first(text: str) -> str:
    return text[:1].upper() + text[1:] if text else text


def assemble(
    topic: TopicAnalysis,
    best: PunchlineCandidate,
    angle: AngleResult,
    fillers: list[str],
    rng: random.Random,
    candidates: tuple[PunchlineCandidate, ...] = (),
) -> JokeResponse:
    """Compose `Kw1 kw2? Filler, <angle> <punch line>.`

    The echo keeps the keywords' surface casing (first word capitalized), and
    the punch line stays final, trailed only by terminal punctuation.
    """
    if topic.selected is None:
        raise ValueError("topic has no selected keyword pair")
    if not fillers:
        raise AngleConfigError("filler list is empty")
    first, second = topic.selected
    filler = _capitalize_first(fillers[rng.randrange(len(fillers))])
    punchline = best.text
    tail = f"{angle.angle} {punchline}".strip()
    text = f"{_capitalize_first(first.surface)} {second.surface}? {filler}, {tail}"
    text = _WHITESPACE.sub(" ", text).strip()
    if not text.endswith(_TERMINAL):
        text += "."
    return JokeResponse(
        text=text,
        responded=True,
        keywords=(first.surface, second.surface),
        filler=filler,
        angle=angle.angle,
        punchline=punchline,
        candidates=candidates or (best,),
    )


def no_response(
    topic: TopicAnalysis, candidates: tuple[PunchlineCandidate, ...] = ()
) -> JokeResponse:
    """Explicit refusal to joke; candidate dump retained for explain mode."""
    return JokeResponse(text="", responded=False, candidates=candidates)
