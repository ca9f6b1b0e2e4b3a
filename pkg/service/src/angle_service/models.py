"""Mask predictors: a deterministic scripted stub and an optional
transformers-backed fill-mask model."""

from __future__ import annotations

from typing import Protocol, Sequence


class MaskPredictor(Protocol):
    """Predicts the token for the masked slot in
    ``topic [MASK] generated punchline``."""

    def predict(
        self,
        topic_tokens: Sequence[str],
        generated: Sequence[str],
        punchline_tokens: Sequence[str],
    ) -> str: ...


class ScriptedPredictor:
    """Replays a fixed prediction sequence; used in tests and as the default
    stand-in model (its script reproduces a plausible backward fill).

    The script position derives from how many tokens have been generated, so
    the predictor is stateless and safe to share across concurrent requests.
    """

    DEFAULT_SCRIPT = ("of", "because", "not", "and", ",")

    def __init__(self, script: Sequence[str] | None = None):
        self._script = list(script if script is not None else self.DEFAULT_SCRIPT)

    def predict(self, topic_tokens, generated, punchline_tokens) -> str:
        position = len(generated)
        if position >= len(self._script):
            return "."
        return self._script[position]


class TransformersPredictor:
    """Greedy top-1 fill-mask over any Hugging Face masked LM."""

    def __init__(self, model_name: str):
        from transformers import pipeline  # heavyweight import on demand

        self._fill = pipeline("fill-mask", model=model_name)
        self._mask = self._fill.tokenizer.mask_token

    def predict(self, topic_tokens, generated, punchline_tokens) -> str:
        tail = " ".join([*generated, *punchline_tokens])
        text = f"{' '.join(topic_tokens)} {self._mask} {tail}"
        best = self._fill(text, top_k=1)[0]
        return str(best["token_str"]).strip()


def load_predictor(spec: str) -> MaskPredictor:
    """``stub`` or ``transformers:<model-name>``."""
    if spec == "stub":
        return ScriptedPredictor()
    if spec.startswith("transformers:"):
        return TransformersPredictor(spec.split(":", 1)[1])
    raise ValueError(f"unknown model spec {spec!r}")
