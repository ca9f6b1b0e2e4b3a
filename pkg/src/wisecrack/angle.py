"""Angle generation: the bridging text between topic and punch line.

Two providers: a seeded template picker (always available) and a client for
the remote mask-fill service. Remote failures degrade to the template path,
never to a lost joke.
"""

from __future__ import annotations

import json
import random
import re
import urllib.error
import urllib.request
from dataclasses import dataclass

SLOT = "{P}"
_WHITESPACE = re.compile(r"\s+")


class AngleConfigError(ValueError):
    """Template or filler configuration is unusable."""


class AngleFallbackSignal(Exception):
    """The remote service declined to produce an angle (first token was
    punctuation); fall through to a template."""


class AngleTransportError(Exception):
    """The remote service could not be reached or replied with garbage."""


@dataclass(frozen=True)
class AngleRequest:
    topic: str
    punchline: str
    max_tokens: int = 12

    def __post_init__(self) -> None:
        if not self.punchline:
            raise ValueError("punchline must be non-empty")
        if self.max_tokens < 1:
            raise ValueError("max_tokens must be >= 1")


@dataclass(frozen=True)
class AngleResult:
    angle: str
    source: str  # template | remote
    fallback_used: bool


def validate_templates(templates: list[str]) -> None:
    if not templates:
        raise AngleConfigError("template list is empty")
    for template in templates:
        if template.count(SLOT) != 1:
            raise AngleConfigError(
                f"template {template!r} must contain exactly one {SLOT} slot"
            )


def template_angle(
    request: AngleRequest,
    templates: list[str],
    rng: random.Random,
    fallback_used: bool = False,
) -> AngleResult:
    """Pick a template uniformly; the angle is the text before the punch-line
    slot (the assembler appends the punch line itself, keeping it final)."""
    validate_templates(templates)
    template = templates[rng.randrange(len(templates))]
    angle = _WHITESPACE.sub(" ", template.split(SLOT)[0]).strip()
    return AngleResult(angle=angle, source="template", fallback_used=fallback_used)


def remote_angle(request: AngleRequest, endpoint: str, timeout: float = 3.0) -> AngleResult:
    """POST the angle request to the mask-fill service.

    Raises AngleFallbackSignal when the service reports fallback and
    AngleTransportError on any transport or protocol problem.
    """
    body = json.dumps(
        {
            "topic": request.topic,
            "punchline": request.punchline,
            "max_tokens": request.max_tokens,
        }
    ).encode("utf-8")
    http_request = urllib.request.Request(
        endpoint.rstrip("/") + "/v1/angle",
        data=body,
        headers={"Content-Type": "application/json"},
        method="POST",
    )
    try:
        with urllib.request.urlopen(http_request, timeout=timeout) as reply:
            payload = json.loads(reply.read().decode("utf-8"))
    except (urllib.error.URLError, OSError, ValueError) as exc:
        raise AngleTransportError(str(exc)) from exc
    if not isinstance(payload, dict) or "fallback" not in payload:
        raise AngleTransportError(f"malformed reply: {payload!r}")
    if payload["fallback"]:
        raise AngleFallbackSignal()
    angle = payload.get("angle")
    if not isinstance(angle, str):
        raise AngleTransportError(f"malformed angle field: {angle!r}")
    return AngleResult(angle=angle.strip(), source="remote", fallback_used=False)
