#!/usr/bin/env python3
"""Regenerate the bundled fixture embedding table.

Builds a small, fully deterministic vector space from themed token clusters,
nudges a handful of token pairs so the walk-through topics select the right
keywords, writes the word2vec text layout, then re-loads the file and audits
everything the test suite relies on:

  * every single-word token (and chunk member) has a pronunciation entry,
  * the three walk-through keyword pairs have strictly minimal cosine
    similarity among their topics' candidates,
  * each walk-through keyword's top-50 association list is exactly its own
    cluster (the six keyword clusters hold 51 tokens for this reason),
  * the punch-line makers, run for real on the walk-through topics, produce
    the expected winners with a clear score margin over every rival,
  * per-query similarity gaps are wide enough that nearest-neighbor order is
    float-stable.
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from wisecrack.association import load_embeddings, most_similar, similarity, write_text_embeddings
from wisecrack.keywords import tokenize
from wisecrack.phonetics import load_lexicon, normalize_word
from wisecrack.punchline import make_juxtaposition, make_portmanteau, make_substitution
from wisecrack.syllables import load_hyphenation_patterns
from wisecrack.wordplay import WordplayConfig

RESOURCES = Path(__file__).resolve().parents[1] / "src" / "wisecrack" / "resources"
DIMENSION = 32
NOISE = 0.45

# The six walk-through keyword clusters hold exactly 51 tokens so that each
# keyword's top-50 neighbors are precisely its 50 cluster mates.
CLUSTERS: dict[str, list[str]] = {
    "flora": [
        "flower", "garden", "bloom", "blossom", "petal", "rose", "tulip",
        "orchid", "lily", "daisy", "fern", "seed", "soil", "lawn", "hedge",
        "vine", "bouquet", "florist", "meadow", "greenhouse", "pollen",
        "shrub", "sprout", "thorn", "herb", "ivy", "thistle", "wisteria",
        "mistletoe", "marigold", "daffodil", "lilac", "gardenia", "azalea",
        "lavender", "jasmine", "willow", "sapling", "orchard", "nursery",
        "trellis", "nectar", "mulch", "topsoil", "bough", "peony",
        "hydrangea", "zinnia", "begonia", "foliage", "bud",
    ],
    "death": [
        "corpse", "carcass", "cadaver", "grave", "coffin", "casket", "morgue",
        "undertaker", "funeral", "sorrow", "autopsy", "skeleton", "entombment",
        "hearse", "mortuary", "epitaph", "eulogy", "obituary", "pallbearer",
        "mourner", "mourning", "memorial", "cremation", "ashes", "bereavement",
        "embalmer", "coroner", "cemetery", "catacomb", "mausoleum",
        "sarcophagus", "vulture", "maggot", "stench", "lament", "reaper",
        "dirge", "requiem", "wake", "formaldehyde", "sepulcher", "funereal",
        "embalming", "crematorium", "crematory", "interment", "pyre",
        "afterlife", "graveside", "mortician", "condolence",
    ],
    "mexico": [
        "mexican", "Puerto_Rican", "tequila", "taco", "burrito", "sombrero",
        "mariachi", "fiesta", "salsa", "guacamole", "enchilada", "tamale",
        "cancun", "tijuana", "aztec", "pinata", "fajita", "quesadilla",
        "churro", "tortilla", "nacho", "jalapeno", "cilantro", "tostada",
        "mezcal", "margarita", "cantina", "hacienda", "adobe", "plaza",
        "matador", "serape", "maracas", "castanets", "flamenco", "rumba",
        "conga", "bongo", "siesta", "amigo", "gringo", "burro", "iguana",
        "coyote", "mesa", "cabana", "avocado", "lime", "chipotle",
        "habanero", "peso",
    ],
    "occult": [
        "demon", "devil", "ghost", "goblin", "ghoul", "banshee", "exorcist",
        "seance", "curse", "witch", "warlock", "specter", "phantom",
        "poltergeist", "omen", "sorcerer", "wizard", "vampire", "zombie",
        "werewolf", "mummy", "wraith", "spook", "haunting", "ouija",
        "pentagram", "ritual", "incantation", "voodoo", "jinx", "talisman",
        "amulet", "broomstick", "cauldron", "potion", "spell", "sorcery",
        "necromancer", "apparition", "gargoyle", "imp", "hobgoblin",
        "trickster", "shaman", "mystic", "seer", "prophecy", "superstition",
        "folklore", "legend", "myth",
    ],
    "disease": [
        "virus", "flu", "influenza", "infection", "bacteria", "epidemic",
        "outbreak", "vaccine", "fever", "pathogen", "contagion", "quarantine",
        "microbe", "germ", "plague", "measles", "sneeze", "cough", "sniffle",
        "mucus", "phlegm", "tissue", "thermometer", "stethoscope", "syringe",
        "antibiotic", "penicillin", "hospital", "clinic", "infirmary",
        "sanitizer", "ointment", "remedy", "antibody", "antigen",
        "booster", "dose", "earache", "diagnosis", "pneumonia", "bronchitis",
        "tonsillitis", "laryngitis", "smallpox", "cholera", "malaria",
        "typhoid", "mumps", "rabies", "parasite", "fungus",
    ],
    "folly": [
        "stupidity", "ignorance", "idiocy", "dumbness", "foolishness",
        "silliness", "gullibility", "absurdity", "nonsense", "folly",
        "blunder", "buffoonery", "dunce", "moron", "fool", "simpleton",
        "dimwit", "nitwit", "halfwit", "numskull", "blockhead", "bonehead",
        "dunderhead", "buffoon", "clod", "dolt", "oaf", "ninny", "twit",
        "goof", "goofiness", "craziness", "madness", "lunacy", "insanity",
        "gaffe", "gibberish", "drivel", "hogwash", "balderdash", "poppycock",
        "malarkey", "tomfoolery", "shenanigans", "hooey", "hokum", "claptrap",
        "prank", "antics", "mischief", "quackery",
    ],
    "research": [
        "Johns_Hopkins", "university", "laboratory", "professor", "scientist",
        "researcher", "experiment", "discovery", "campus", "scholar",
        "academia", "dean", "lecture", "thesis",
    ],
    "office": [
        "pencil", "pen", "paper", "desk", "eraser", "notebook", "stapler",
        "crayon", "marker", "folder",
    ],
    "food": [
        "pizza", "cheese", "burger", "sandwich", "bacon", "noodle", "pretzel",
        "waffle", "pancake", "muffin", "donut", "bagel", "cupcake", "hot_dog",
        "ice_cream", "peanut_butter",
    ],
    "animals": [
        "cat", "horse", "donkey", "monkey", "gorilla", "parrot", "penguin",
        "walrus", "weasel", "ferret", "badger", "otter", "moose", "goose",
        "llama",
    ],
    "sea": [
        "ocean", "sailor", "anchor", "harbor", "seaweed", "dolphin", "whale",
        "kraken", "tide", "lighthouse", "buoy", "blue_whale",
    ],
    "space": [
        "rocket", "planet", "comet", "asteroid", "galaxy", "astronaut",
        "telescope", "orbit", "meteor", "lunar", "martian", "black_hole",
    ],
    "music": [
        "guitar", "banjo", "trumpet", "fiddle", "drummer", "polka", "opera",
        "accordion", "ukulele", "kazoo", "tuba", "yodeling",
    ],
    "sports": [
        "soccer", "hockey", "bowling", "referee", "stadium", "trophy",
        "javelin", "marathon", "dugout", "umpire",
    ],
    "weather": [
        "thunder", "blizzard", "drizzle", "tornado", "monsoon", "hailstorm",
        "fog", "breeze", "humidity", "frost",
    ],
    "tools": [
        "hammer", "wrench", "chisel", "shovel", "crowbar", "mallet", "pliers",
        "sawdust", "toolbox", "grease",
    ],
    "clothing": [
        "tuxedo", "sweater", "mitten", "sneaker", "pajamas", "bathrobe",
        "fedora", "poncho", "overalls", "corduroy",
    ],
    "money": [
        "banker", "nickel", "dollar", "wallet", "coupon", "auction", "bargain",
        "jackpot", "pawnshop", "piggy_bank",
    ],
    "travel": [
        "luggage", "passport", "subway", "taxi", "motel", "highway",
        "suitcase", "campground", "detour", "caravan",
    ],
    "drinks": [
        "coffee", "espresso", "lemonade", "cocoa", "cider", "eggnog",
        "milkshake",
    ],
}

KEYWORD_CLUSTERS = ("flora", "death", "mexico", "occult", "disease", "folly")

# (token_to_adjust, reference_token, coupling): positive pulls together,
# negative pushes apart. Applied in order, renormalizing after each step.
COUPLINGS: list[tuple[str, str, float]] = [
    ("corpse", "flower", -0.40),
    ("demon", "mexican", -0.40),
    ("stupidity", "virus", -0.40),
    ("pencil", "mexican", 0.18),
    ("pencil", "demon", 0.18),
    ("Johns_Hopkins", "virus", 0.30),
    ("Johns_Hopkins", "stupidity", 0.12),
    ("bloom", "corpse", 0.12),
]

# pair that must be the strict cosine minimum among its topic's candidates
KEYWORD_MINIMA: list[tuple[tuple[str, str], list[str]]] = [
    (("flower", "corpse"), ["flower", "corpse", "bloom"]),
    (("mexican", "demon"), ["mexican", "demon", "pencil"]),
    (("virus", "stupidity"), ["virus", "stupidity", "Johns_Hopkins"]),
]

WALKTHROUGHS = [
    {
        "sentence": "I just read that some flower that smells like a corpse is about to bloom.",
        "keywords": ("flower", "corpse"),
        "winner": ("juxtaposition", "garden carcass"),
    },
    {
        "sentence": "People are trying to summon a Mexican demon by getting him to spin a pencil.",
        "keywords": ("Mexican", "demon"),
        "winner": ("substitution", "Puerto Demon"),
    },
    {
        "sentence": "Researchers at Johns Hopkins have discovered a virus that causes stupidity.",
        "keywords": ("virus", "stupidity"),
        "winner": ("portmanteau", "flupidity"),
    },
]

MARGIN = 0.1


def build(seed: int) -> tuple[list[str], np.ndarray]:
    rng = np.random.default_rng(seed)
    basis, _ = np.linalg.qr(rng.standard_normal((DIMENSION, DIMENSION)))
    vocabulary: list[str] = []
    rows: list[np.ndarray] = []
    for cluster_index, tokens in enumerate(CLUSTERS.values()):
        base = basis[:, cluster_index]
        for token in tokens:
            noise = rng.standard_normal(DIMENSION)
            vector = base + noise * (NOISE / np.linalg.norm(noise))
            vocabulary.append(token)
            rows.append(vector / np.linalg.norm(vector))
    matrix = np.vstack(rows)
    index = {token: i for i, token in enumerate(vocabulary)}
    for token, reference, coupling in COUPLINGS:
        adjusted = matrix[index[token]] + coupling * matrix[index[reference]]
        matrix[index[token]] = adjusted / np.linalg.norm(adjusted)
    return vocabulary, matrix


def audit_makers(store) -> None:
    lexicon = load_lexicon(RESOURCES / "lexicon.dict")
    hyphenator = load_hyphenation_patterns(RESOURCES / "hyphen_en.pat")
    config = WordplayConfig()
    for case in WALKTHROUGHS:
        exclude = frozenset(normalize_word(t) for t in tokenize(case["sentence"]))
        kw1, kw2 = case["keywords"]
        produced = {
            "juxtaposition": make_juxtaposition(kw1, kw2, store, lexicon, config, exclude),
            "substitution": make_substitution(kw1, kw2, store, lexicon, config),
            "portmanteau": make_portmanteau(kw1, kw2, store, lexicon, config, hyphenator),
        }
        want_kind, want_text = case["winner"]
        winner = produced[want_kind]
        assert winner is not None and winner.text == want_text, (
            f"{case['sentence']!r}: wanted {want_text!r}, "
            f"got {None if winner is None else winner.text!r} "
            f"(all: { {k: (c.text, round(c.score.total, 3)) for k, c in produced.items() if c} })"
        )
        assert winner.score.total >= config.threshold + MARGIN, winner
        for kind, rival in produced.items():
            if kind == want_kind or rival is None:
                continue
            assert rival.score.total <= winner.score.total - MARGIN, (
                f"{case['sentence']!r}: rival {kind} {rival.text!r} "
                f"{rival.score.total:.3f} too close to {want_text!r} "
                f"{winner.score.total:.3f}"
            )


def verify(path: Path) -> None:
    store = load_embeddings(path)
    lexicon = load_lexicon(RESOURCES / "lexicon.dict")
    for token in store.vocabulary:
        for member in token.split("_"):
            assert member.lower() in lexicon, f"{member!r} missing from lexicon"
    for (first, second), candidates in KEYWORD_MINIMA:
        target = similarity(store, first, second)
        for i, a in enumerate(candidates):
            for b in candidates[i + 1:]:
                if {a, b} == {first, second}:
                    continue
                other = similarity(store, a, b)
                assert target < other - 0.05, (first, second, a, b, target, other)
    keywords = ("flower", "corpse", "mexican", "demon", "virus", "stupidity")
    for cluster_name, keyword in zip(KEYWORD_CLUSTERS, keywords):
        cluster = CLUSTERS[cluster_name]
        assert keyword in cluster and len(cluster) == 51, cluster_name
        hits = {a.token for a in most_similar(store, keyword, 50)}
        assert hits == set(cluster) - {keyword}, (
            keyword,
            sorted(hits - set(cluster)),
            sorted(set(cluster) - {keyword} - hits),
        )
    audit_makers(store)
    worst_gap = np.inf
    for i in range(store.size):
        sims = np.sort(store.vectors @ store.vectors[i])[::-1]
        worst_gap = min(worst_gap, float(np.min(-np.diff(sims))))
    assert worst_gap >= 1e-9, f"tie-separation gap too small: {worst_gap}"
    print(f"verified {store.size} tokens, dim {store.dimension}, min gap {worst_gap:.2e}")


def main() -> None:
    out = RESOURCES / "embeddings.txt"
    for seed in range(200):
        vocabulary, matrix = build(seed)
        write_text_embeddings(out, vocabulary, matrix)
        try:
            verify(out)
        except AssertionError as exc:
            print(f"seed {seed} rejected: {exc}")
            continue
        print(f"wrote {out} (seed {seed})")
        return
    raise SystemExit("no seed satisfied the fixture constraints")


if __name__ == "__main__":
    main()
