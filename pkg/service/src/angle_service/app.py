"""HTTP wiring: POST /v1/angle per the joke engine's wire contract, plus a
health endpoint reporting model state."""

from __future__ import annotations

import logging
from contextlib import asynccontextmanager
from typing import Callable

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .fill import fill_angle
from .models import MaskPredictor

logger = logging.getLogger("angle_service")


class AngleIn(BaseModel):
    topic: str = Field(min_length=1)
    punchline: str = Field(min_length=1)
    max_tokens: int = Field(default=12, ge=1)


def create_app(predictor_factory: Callable[[], MaskPredictor]) -> FastAPI:
    """Build the app; the model loads at startup and failures leave the
    service alive but unhealthy (every request then reports fallback)."""
    state = {"predictor": None, "status": "loading"}

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        try:
            state["predictor"] = predictor_factory()
            state["status"] = "ok"
        except Exception:
            logger.exception("model load failed")
            state["status"] = "error"
        yield

    app = FastAPI(title="angle-service", lifespan=lifespan)

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.get("/healthz")
    def healthz():
        return {"status": state["status"]}

    @app.post("/v1/angle")
    def angle(body: AngleIn):
        predictor = state["predictor"]
        if predictor is None:
            return {"angle": "", "tokens": [], "fallback": True}
        try:
            return fill_angle(body.topic, body.punchline, body.max_tokens, predictor)
        except Exception:
            logger.exception("inference failed")
            return {"angle": "", "tokens": [], "fallback": True}

    return app
