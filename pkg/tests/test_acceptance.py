"""Acceptance suite: one test per release criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; every tolerance is pinned here.
"""

import dataclasses
import json
import random
import re
import time

import numpy as np
import pytest

from corpus import CORPUS
from test_phonetics import naive_levenshtein
from wisecrack.cli import main
from wisecrack.engine import EngineConfig, build
from wisecrack.keywords import KeywordCandidate, select_keyword_pair
from wisecrack.phonetics import edit_distance
from wisecrack.response import JokeResponse
from wisecrack.syllables import syllabify
from wisecrack.wordplay import WordplayConfig, wordplay_score

from conftest import WALKTHROUGH_TOPICS

WEIGHTS = ("w_edit", "w_allit", "w_asson", "w_stop", "w_end", "w_syll")
TERMS = ("edit_sub", "allit_sub", "asson_sub", "stop_sub", "end_sub", "syll_sub")


def report(name):
    print(f"ACCEPTANCE PASS: {name}")


def test_paper_example_reproduction():
    started = time.perf_counter()
    engine = build(EngineConfig(seed=0))
    for sentence, (kw1, kw2), punchline in WALKTHROUGH_TOPICS:
        response = engine.respond(sentence)
        assert response.responded, sentence
        assert response.punchline == punchline
        echo_first = kw1[:1].upper() + kw1[1:]
        pattern = (
            rf"^{re.escape(echo_first)} {re.escape(kw2)}\? "
            rf"[A-Z][A-Za-z-]*, .+ {re.escape(punchline)}\.$"
        )
        assert re.match(pattern, response.text), (pattern, response.text)
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0, f"walk-throughs took {elapsed:.3f}s"
    report(f"paper-example reproduction ({elapsed:.3f}s)")


def test_edit_distance_oracle():
    rng = random.Random(2024)
    alphabet = ["K", "AE1", "T", "B", "S", "UW0", "R", "IY0"]
    started = time.perf_counter()
    for _ in range(1000):
        a = tuple(rng.choice(alphabet) for _ in range(rng.randint(0, 8)))
        b = tuple(rng.choice(alphabet) for _ in range(rng.randint(0, 8)))
        assert edit_distance(a, b) == naive_levenshtein(a, b)
    elapsed = time.perf_counter() - started
    assert elapsed < 5.0, f"oracle comparison took {elapsed:.3f}s"
    report(f"edit-distance oracle, 1000 pairs ({elapsed:.3f}s)")


def test_wordplay_symmetry_and_linearity(lexicon):
    rng = random.Random(99)
    words = sorted(lexicon.words())
    config = WordplayConfig()
    for index in range(1000):
        a, b = rng.sample(words, 2)
        forward = wordplay_score(a, b, lexicon, config)
        assert forward == wordplay_score(b, a, lexicon, config)
        if index % 25 == 0:
            for weight, term in zip(WEIGHTS, TERMS):
                doubled = dataclasses.replace(
                    config, **{weight: getattr(config, weight) * 2}
                )
                delta = wordplay_score(a, b, lexicon, doubled).total - forward.total
                contribution = getattr(config, weight) * getattr(forward, term)
                assert abs(delta - contribution) <= 1e-9
    report("wordplay symmetry + weight linearity, 1000 pairs")


def test_association_oracle(store):
    from wisecrack.association import most_similar

    for token in store.vocabulary:
        query = store.vector(token)
        scored = []
        for i, name in enumerate(store.vocabulary):
            if name == token:
                continue
            scored.append((float(np.dot(store.vectors[i], query)), i, name))
        scored.sort(key=lambda item: (-item[0], item[1]))
        expected = scored[:50]
        actual = most_similar(store, token, 50)
        assert [a.token for a in actual] == [name for _, _, name in expected], token
        for got, (sim, _, _) in zip(actual, expected):
            assert abs(got.similarity - sim) <= 1e-6
    report(f"association oracle over all {store.size} fixture queries")


def test_keyword_pair_oracle(store):
    import itertools

    rng = random.Random(314)
    vocabulary = store.vocabulary
    for _ in range(200):
        tokens = rng.sample(vocabulary, rng.randint(2, 7))
        candidates = [
            KeywordCandidate(
                surface=t.replace("_", " "),
                normalized=t.replace("_", " ").lower(),
                span=(i, i + 1),
                kind="noun",
            )
            for i, t in enumerate(tokens)
        ]
        picked = select_keyword_pair(candidates, store)
        best = None
        for first, second in itertools.combinations(candidates, 2):
            va = store.vector(tokens[first.span[0]])
            vb = store.vector(tokens[second.span[0]])
            sim = float(np.dot(va, vb))
            if best is None or sim < best[2]:
                best = (first, second, sim)
        assert picked == best
    report("keyword-pair oracle, 200 candidate sets")


def test_threshold_monotonicity():
    responded = {}
    for threshold in (2.5, 3.5, 4.5, 6.0):
        config = EngineConfig(
            seed=0, wordplay=WordplayConfig(threshold=threshold)
        )
        engine = build(config)
        responded[threshold] = {s for s in CORPUS if engine.respond(s).responded}
    assert responded[6.0] <= responded[4.5] <= responded[3.5] <= responded[2.5]
    assert responded[2.5], "corpus should produce at least one response"
    report(
        "threshold monotonicity on 50-sentence corpus "
        f"({', '.join(str(len(responded[t])) for t in (2.5, 3.5, 4.5, 6.0))} responses)"
    )


def test_batch_determinism(tmp_path):
    source = tmp_path / "corpus.jsonl"
    source.write_text("\n".join(json.dumps({"input": s}) for s in CORPUS) + "\n")
    outputs = []
    for run in range(2):
        sink = tmp_path / f"out{run}.jsonl"
        code = main(["--seed", "7", "batch", "--in", str(source), "--out", str(sink)])
        assert code == 0
        outputs.append(sink.read_bytes())
    assert outputs[0] == outputs[1]
    report("batch determinism, byte-identical across runs")


def test_syllabifier_identity(lexicon, noun_lexicon, hyphenator):
    sample = sorted(
        {w for w in lexicon.words() if w.isalpha()}
        | {w for w in noun_lexicon if w.isalpha()}
    )[:1000]
    assert len(sample) == 1000
    for word in sample:
        assert "".join(syllabify(word, hyphenator)) == word
    report("syllabifier identity on 1000-word sample")


def test_never_fail_contract(engine):
    rng = random.Random(0xC0FFEE)

    def junk_line():
        length = rng.randint(0, 80)
        chars = []
        while len(chars) < length:
            point = rng.randint(1, 0x10FFFF)
            if 0xD800 <= point <= 0xDFFF or chr(point) in "\r\n":
                continue
            chars.append(chr(point))
        return "".join(chars)

    started = time.perf_counter()
    for _ in range(10_000):
        response = engine.respond(junk_line())
        assert isinstance(response, JokeResponse)
    elapsed = time.perf_counter() - started
    report(f"never-fail contract, 10000 fuzz lines ({elapsed:.1f}s)")
