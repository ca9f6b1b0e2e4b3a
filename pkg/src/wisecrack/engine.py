"""Engine: loads resources once, then answers topics with joke responses."""

from __future__ import annotations

import configparser
import hashlib
import os
import random
from dataclasses import dataclass, field, replace
from importlib import resources as importlib_resources
from pathlib import Path

from .angle import (
    AngleFallbackSignal,
    AngleRequest,
    AngleTransportError,
    remote_angle,
    template_angle,
    validate_templates,
)
from .association import load_embeddings
from .keywords import analyze_topic
from .phonetics import load_lexicon, normalize_word
from .punchline import (
    PunchlineCandidate,
    make_juxtaposition,
    make_portmanteau,
    make_substitution,
    select_best,
)
from .response import JokeResponse, assemble, no_response
from .syllables import load_hyphenation_patterns
from .textlists import load_line_list, load_word_set
from .wordplay import WordplayConfig


class BuildError(RuntimeError):
    """A resource could not be loaded; the message names it."""


_ENV_PREFIX = "WISECRACK_"
_RESOURCE_FIELDS = (
    "lexicon",
    "embeddings",
    "stopwords",
    "nouns",
    "fillers",
    "templates",
    "hyphen_patterns",
)


def _default_resource(name: str) -> Path:
    return Path(str(importlib_resources.files("wisecrack") / "resources" / name))


@dataclass(frozen=True)
class EngineConfig:
    wordplay: WordplayConfig = field(default_factory=WordplayConfig)
    lexicon: Path = field(default_factory=lambda: _default_resource("lexicon.dict"))
    embeddings: Path = field(default_factory=lambda: _default_resource("embeddings.txt"))
    stopwords: Path = field(default_factory=lambda: _default_resource("stopwords.txt"))
    nouns: Path = field(default_factory=lambda: _default_resource("nouns.txt"))
    fillers: Path = field(default_factory=lambda: _default_resource("fillers.txt"))
    templates: Path = field(default_factory=lambda: _default_resource("templates.txt"))
    hyphen_patterns: Path = field(default_factory=lambda: _default_resource("hyphen_en.pat"))
    angle_provider: str = "template"  # template | remote
    angle_url: str | None = None
    angle_timeout: float = 3.0
    angle_max_tokens: int = 12
    seed: int = 0

    def __post_init__(self) -> None:
        if self.angle_provider not in ("template", "remote"):
            raise ValueError(f"unknown angle provider {self.angle_provider!r}")
        if self.angle_provider == "remote" and not self.angle_url:
            raise ValueError("remote angle provider requires angle_url")


def _apply_env(config: EngineConfig) -> EngineConfig:
    updates: dict = {}
    for name in _RESOURCE_FIELDS:
        value = os.environ.get(_ENV_PREFIX + name.upper())
        if value:
            updates[name] = Path(value)
    url = os.environ.get(_ENV_PREFIX + "ANGLE_URL")
    if url:
        updates["angle_url"] = url
        updates["angle_provider"] = "remote"
    return replace(config, **updates) if updates else config


def default_config() -> EngineConfig:
    """Bundled fixture resources, honoring WISECRACK_* environment overrides."""
    return _apply_env(EngineConfig())


def load_config(path: str | Path) -> EngineConfig:
    """Read an INI-style config file: [resources], [wordplay], [angle], [engine]."""
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise BuildError(f"config file not found: {path}")
    config = EngineConfig()
    if parser.has_section("resources"):
        base = Path(path).resolve().parent
        updates = {}
        for name in _RESOURCE_FIELDS:
            if parser.has_option("resources", name):
                raw = Path(parser.get("resources", name))
                updates[name] = raw if raw.is_absolute() else base / raw
        config = replace(config, **updates)
    if parser.has_section("wordplay"):
        wp_kwargs = {}
        for key, value in parser.items("wordplay"):
            if key in ("k_assoc", "portmanteau_max_dist"):
                wp_kwargs[key] = int(value)
            else:
                wp_kwargs[key] = float(value)
        config = replace(config, wordplay=WordplayConfig(**wp_kwargs))
    if parser.has_section("angle"):
        section = parser["angle"]
        config = replace(
            config,
            angle_provider=section.get("provider", config.angle_provider),
            angle_url=section.get("url", config.angle_url),
            angle_timeout=section.getfloat("timeout", config.angle_timeout),
            angle_max_tokens=section.getint("max_tokens", config.angle_max_tokens),
        )
    if parser.has_section("engine"):
        config = replace(config, seed=parser.getint("engine", "seed", fallback=config.seed))
    return _apply_env(config)


class Engine:
    """Immutable resource bundle; respond() calls are independent and
    reproducible (per-call rng derived from the seed and the input text)."""

    def __init__(self, config: EngineConfig):
        self.config = config
        self._load()

    def _load(self) -> None:
        loaders = [
            ("lexicon", lambda: load_lexicon(self.config.lexicon)),
            ("embeddings", lambda: load_embeddings(self.config.embeddings)),
            ("stopwords", lambda: load_word_set(self.config.stopwords)),
            ("nouns", lambda: load_word_set(self.config.nouns)),
            ("fillers", lambda: load_line_list(self.config.fillers)),
            ("templates", lambda: load_line_list(self.config.templates)),
            ("hyphenator", lambda: load_hyphenation_patterns(self.config.hyphen_patterns)),
        ]
        for name, loader in loaders:
            try:
                setattr(self, name, loader())
            except Exception as exc:
                raise BuildError(f"failed to load {name}: {exc}") from exc
        if not self.fillers:
            raise BuildError("failed to load fillers: list is empty")
        try:
            validate_templates(self.templates)
        except Exception as exc:
            raise BuildError(f"failed to load templates: {exc}") from exc

    @property
    def resource_counts(self) -> dict[str, int]:
        return {
            "lexicon_entries": self.lexicon.size,
            "vocabulary_size": self.embeddings.size,
            "stopwords": len(self.stopwords),
            "nouns": len(self.nouns),
            "fillers": len(self.fillers),
            "templates": len(self.templates),
        }

    def _rng_for(self, sentence: str) -> random.Random:
        digest = hashlib.sha256(f"{self.config.seed}:{sentence}".encode("utf-8")).digest()
        return random.Random(int.from_bytes(digest[:8], "big"))

    def _angle_for(self, sentence: str, punchline: str, rng: random.Random):
        request = AngleRequest(
            topic=sentence, punchline=punchline, max_tokens=self.config.angle_max_tokens
        )
        if self.config.angle_provider == "remote" and self.config.angle_url:
            try:
                return remote_angle(request, self.config.angle_url, self.config.angle_timeout)
            except AngleFallbackSignal:
                return template_angle(request, self.templates, rng, fallback_used=True)
            except AngleTransportError:
                return template_angle(request, self.templates, rng, fallback_used=True)
        return template_angle(request, self.templates, rng)

    def respond(self, sentence: str) -> JokeResponse:
        """Full pipeline; never raises, worst case is a structured no-response."""
        topic = analyze_topic(sentence, self.stopwords, self.nouns, self.embeddings)
        if topic.selected is None:
            return no_response(topic)
        first, second = topic.selected
        kw1, kw2 = first.surface, second.surface
        if normalize_word(kw1.split()[-1]) == normalize_word(kw2.split()[-1]):
            return no_response(topic)
        exclude = frozenset(normalize_word(t) for t in topic.tokens)
        config = self.config.wordplay
        candidates: list[PunchlineCandidate] = []
        for candidate in (
            make_juxtaposition(kw1, kw2, self.embeddings, self.lexicon, config, exclude),
            make_substitution(kw1, kw2, self.embeddings, self.lexicon, config),
            make_portmanteau(kw1, kw2, self.embeddings, self.lexicon, config, self.hyphenator),
        ):
            if candidate is not None:
                candidates.append(candidate)
        best = select_best(candidates, config)
        if best is None:
            return no_response(topic, tuple(candidates))
        rng = self._rng_for(sentence)
        angle = self._angle_for(sentence, best.text, rng)
        return assemble(topic, best, angle, self.fillers, rng, tuple(candidates))


def build(config: EngineConfig | None = None) -> Engine:
    """Load every resource up front; raises BuildError naming any bad one."""
    return Engine(config or default_config())
