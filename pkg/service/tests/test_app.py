import pytest
from fastapi.testclient import TestClient

from angle_service.app import create_app
from angle_service.models import ScriptedPredictor

# The exact payloads the joke engine's client replays in its own tests;
# field names and values must match bit for bit.
RECORDED_SUCCESS = {
    "angle": "and not because of",
    "tokens": ["and", "not", "because", "of"],
    "fallback": False,
}
RECORDED_FALLBACK = {"angle": "", "tokens": [], "fallback": True}


@pytest.fixture()
def client():
    app = create_app(lambda: ScriptedPredictor(["of", "because", "not", "and", ","]))
    with TestClient(app) as test_client:
        yield test_client


@pytest.fixture()
def fallback_client():
    app = create_app(lambda: ScriptedPredictor([","]))
    with TestClient(app) as test_client:
        yield test_client


class TestAngleEndpoint:
    def test_success_payload_matches_recorded_fixture(self, client):
        reply = client.post(
            "/v1/angle",
            json={"topic": "some topic", "punchline": "flupidity", "max_tokens": 12},
        )
        assert reply.status_code == 200
        assert reply.json() == RECORDED_SUCCESS

    def test_fallback_payload_matches_recorded_fixture(self, fallback_client):
        reply = fallback_client.post(
            "/v1/angle", json={"topic": "t", "punchline": "p", "max_tokens": 12}
        )
        assert reply.status_code == 200
        assert reply.json() == RECORDED_FALLBACK

    def test_max_tokens_defaults_to_twelve(self, client):
        reply = client.post("/v1/angle", json={"topic": "t", "punchline": "p"})
        assert reply.status_code == 200
        assert len(reply.json()["tokens"]) <= 12

    def test_malformed_body_is_400(self, client):
        for payload in (
            {"topic": "t"},
            {"punchline": "p"},
            {"topic": "", "punchline": "p"},
            {"topic": "t", "punchline": "p", "max_tokens": 0},
            {"topic": 5, "punchline": "p"},
        ):
            assert client.post("/v1/angle", json=payload).status_code == 400

    def test_field_names_are_exact(self, client):
        reply = client.post("/v1/angle", json={"topic": "t", "punchline": "p"})
        assert set(reply.json()) == {"angle", "tokens", "fallback"}

    def test_repeated_requests_get_identical_replies(self, client):
        # the shared model handle must stay effectively read-only
        body = {"topic": "some topic", "punchline": "flupidity", "max_tokens": 12}
        first = client.post("/v1/angle", json=body).json()
        second = client.post("/v1/angle", json=body).json()
        assert first == second == RECORDED_SUCCESS


class TestHealth:
    def test_healthy(self, client):
        assert client.get("/healthz").json() == {"status": "ok"}

    def test_model_load_failure_reports_error_and_degrades(self):
        def broken():
            raise RuntimeError("no weights")

        app = create_app(broken)
        with TestClient(app) as client:
            assert client.get("/healthz").json() == {"status": "error"}
            reply = client.post("/v1/angle", json={"topic": "t", "punchline": "p"})
            assert reply.status_code == 200
            assert reply.json() == RECORDED_FALLBACK

    def test_inference_failure_degrades_not_errors(self):
        class Exploding:
            def predict(self, *args):
                raise RuntimeError("inference blew up")

        app = create_app(Exploding)
        with TestClient(app) as client:
            reply = client.post("/v1/angle", json={"topic": "t", "punchline": "p"})
            assert reply.status_code == 200
            assert reply.json() == RECORDED_FALLBACK
