"""Backward mask-fill: grow an angle leftward from the punch line.

Each step masks the slot directly before the text generated so far and takes
the model's top prediction. Generation stops on a punctuation token, on a
token already generated, or at the ``max_tokens`` cap. A punctuation token on
the very first step signals that no usable angle exists (``fallback``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .models import MaskPredictor

MASK = "[MASK]"


def is_punctuation(token: str) -> bool:
    """A stop token: no alphanumeric content at all."""
    return not any(ch.isalnum() for ch in token)


@dataclass
class FillState:
    topic_tokens: list[str]
    punchline_tokens: list[str]
    generated: list[str] = field(default_factory=list)
    steps: int = 0

    def sequence(self) -> list[str]:
        return [*self.topic_tokens, MASK, *self.generated, *self.punchline_tokens]


def fill_angle(
    topic: str, punchline: str, max_tokens: int, predictor: MaskPredictor
) -> dict:
    """Run the backward fill loop; returns the wire payload dict."""
    state = FillState(topic_tokens=topic.split(), punchline_tokens=punchline.split())
    while state.steps < max_tokens:
        prediction = predictor.predict(
            state.topic_tokens, state.generated, state.punchline_tokens
        )
        if is_punctuation(prediction):
            if state.steps == 0:
                return {"angle": "", "tokens": [], "fallback": True}
            break
        if prediction in state.generated or prediction == MASK:
            break
        state.generated.insert(0, prediction)
        state.steps += 1
    return {
        "angle": " ".join(state.generated),
        "tokens": list(state.generated),
        "fallback": False,
    }
