from __future__ import annotations

from pathlib import Path

import pytest

from wisecrack.association import load_embeddings
from wisecrack.engine import EngineConfig, build
from wisecrack.phonetics import load_lexicon
from wisecrack.syllables import load_hyphenation_patterns
from wisecrack.textlists import load_word_set

RESOURCES = Path(__file__).resolve().parents[1] / "src" / "wisecrack" / "resources"

WALKTHROUGH_TOPICS = [
    (
        "I just read that some flower that smells like a corpse is about to bloom.",
        ("flower", "corpse"),
        "garden carcass",
    ),
    (
        "People are trying to summon a Mexican demon by getting him to spin a pencil.",
        ("Mexican", "demon"),
        "Puerto Demon",
    ),
    (
        "Researchers at Johns Hopkins have discovered a virus that causes stupidity.",
        ("virus", "stupidity"),
        "flupidity",
    ),
]


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon(RESOURCES / "lexicon.dict")


@pytest.fixture(scope="session")
def store():
    return load_embeddings(RESOURCES / "embeddings.txt")


@pytest.fixture(scope="session")
def hyphenator():
    return load_hyphenation_patterns(RESOURCES / "hyphen_en.pat")


@pytest.fixture(scope="session")
def stopwords():
    return load_word_set(RESOURCES / "stopwords.txt")


@pytest.fixture(scope="session")
def noun_lexicon():
    return load_word_set(RESOURCES / "nouns.txt")


@pytest.fixture(scope="session")
def engine():
    return build(EngineConfig(seed=0))
