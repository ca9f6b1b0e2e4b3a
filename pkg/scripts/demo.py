#!/usr/bin/env python3
"""Run the engine over a handful of topics and print what each stage did."""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from wisecrack.engine import EngineConfig, build

TOPICS = [
    "I just read that some flower that smells like a corpse is about to bloom.",
    "People are trying to summon a Mexican demon by getting him to spin a pencil.",
    "Researchers at Johns Hopkins have discovered a virus that causes stupidity.",
    "The astronaut smuggled a ukulele onto the rocket.",
    "A goblin was spotted stealing tequila from the cantina.",
    "The coroner ordered a burrito with extra jalapeno.",
    "Hello there.",
]


def main() -> None:
    engine = build(EngineConfig(seed=int(sys.argv[1]) if len(sys.argv) > 1 else 0))
    counts = engine.resource_counts
    print(f"engine ready: {counts['lexicon_entries']} pronunciations, "
          f"{counts['vocabulary_size']} embedding tokens\n")
    for topic in TOPICS:
        response = engine.respond(topic)
        print(f"> {topic}")
        if not response.responded:
            print("  (no joke)\n")
            continue
        kw1, kw2 = response.keywords
        print(f"  keywords: {kw1} + {kw2}")
        for candidate in response.candidates:
            marker = "*" if candidate.text == response.punchline else " "
            print(f"  {marker} [{candidate.kind}] {candidate.text!r} "
                  f"score {candidate.score.total:.2f}")
        print(f"  => {response.text}\n")


if __name__ == "__main__":
    main()
