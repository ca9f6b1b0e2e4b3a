"""wisecrack: improvised wordplay joke responses for conversational topics."""

__version__ = "0.1.0"

from .angle import (
    AngleConfigError,
    AngleFallbackSignal,
    AngleRequest,
    AngleResult,
    AngleTransportError,
    remote_angle,
    template_angle,
)
from .association import (
    Association,
    EmbeddingFormatError,
    EmbeddingStore,
    load_embeddings,
    most_similar,
    phrase_vector,
    similarity,
)
from .engine import BuildError, Engine, EngineConfig, build, default_config, load_config
from .keywords import (
    KeywordCandidate,
    TopicAnalysis,
    analyze_topic,
    extract_candidates,
    select_keyword_pair,
)
from .phonetics import (
    LexiconFormatError,
    Phoneme,
    PhoneticLexicon,
    Pronunciation,
    edit_distance,
    load_lexicon,
    normalize_word,
    pronounce,
    rhymes,
)
from .punchline import (
    PunchlineCandidate,
    make_juxtaposition,
    make_portmanteau,
    make_substitution,
    select_best,
)
from .response import JokeResponse, assemble, no_response
from .syllables import Hyphenator, load_hyphenation_patterns, syllabify
from .wordplay import (
    RejectedPairError,
    WordplayConfig,
    WordplayScore,
    alliteration_subscore,
    assonance_subscore,
    edit_subscore,
    ending_subscore,
    stop_consonant_subscore,
    syllable_subscore,
    wordplay_score,
)
