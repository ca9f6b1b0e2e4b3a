"""Wire-contract check against the joke engine's real HTTP client."""

import contextlib
import socket
import threading
import time

import pytest
import uvicorn

from angle_service.app import create_app
from angle_service.models import ScriptedPredictor

wisecrack_angle = pytest.importorskip("wisecrack.angle")


@contextlib.contextmanager
def live_service(script):
    with socket.socket() as probe:
        probe.bind(("127.0.0.1", 0))
        port = probe.getsockname()[1]
    app = create_app(lambda: ScriptedPredictor(script))
    config = uvicorn.Config(app, host="127.0.0.1", port=port, log_level="error")
    server = uvicorn.Server(config)
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    deadline = time.time() + 5
    while not server.started:
        if time.time() > deadline:
            raise RuntimeError("service did not start")
        time.sleep(0.02)
    try:
        yield f"http://127.0.0.1:{port}"
    finally:
        server.should_exit = True
        thread.join(timeout=5)


class TestEngineClientAgainstLiveService:
    def test_successful_angle(self):
        with live_service(["of", "because", "not", "and", ","]) as url:
            request = wisecrack_angle.AngleRequest(
                topic="Researchers discovered a virus.", punchline="flupidity"
            )
            result = wisecrack_angle.remote_angle(request, url, timeout=5)
        assert result.angle == "and not because of"
        assert result.source == "remote"

    def test_fallback_signal(self):
        with live_service([","]) as url:
            request = wisecrack_angle.AngleRequest(topic="t", punchline="p")
            with pytest.raises(wisecrack_angle.AngleFallbackSignal):
                wisecrack_angle.remote_angle(request, url, timeout=5)
