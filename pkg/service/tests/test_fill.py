from angle_service.fill import MASK, FillState, fill_angle, is_punctuation
from angle_service.models import ScriptedPredictor


class TestStopConditions:
    def test_first_token_punctuation_is_fallback(self):
        result = fill_angle("topic text", "flupidity", 12, ScriptedPredictor([","]))
        assert result == {"angle": "", "tokens": [], "fallback": True}

    def test_backward_accumulation(self):
        predictor = ScriptedPredictor(["of", "because", "not", "and", ","])
        result = fill_angle("topic text", "flupidity", 12, predictor)
        assert result == {
            "angle": "and not because of",
            "tokens": ["and", "not", "because", "of"],
            "fallback": False,
        }

    def test_repeated_token_stops(self):
        result = fill_angle("t", "p", 12, ScriptedPredictor(["so", "so"]))
        assert result == {"angle": "so", "tokens": ["so"], "fallback": False}

    def test_max_tokens_cap(self):
        endless = ScriptedPredictor([f"w{i}" for i in range(100)])
        result = fill_angle("t", "p", 5, endless)
        assert len(result["tokens"]) == 5
        assert result["fallback"] is False

    def test_mid_generation_punctuation_keeps_angle(self):
        predictor = ScriptedPredictor(["now", "!"])
        result = fill_angle("t", "p", 12, predictor)
        assert result == {"angle": "now", "tokens": ["now"], "fallback": False}

    def test_mask_prediction_stops(self):
        predictor = ScriptedPredictor(["so", MASK, "never-reached"])
        result = fill_angle("t", "p", 12, predictor)
        assert result["tokens"] == ["so"]


class TestInvariants:
    def test_termination_for_any_script(self):
        for script in ([], ["a"], ["a", "a"], [","], [f"x{i}" for i in range(500)]):
            result = fill_angle("topic", "punch", 12, ScriptedPredictor(script))
            assert len(result["tokens"]) <= 12

    def test_no_mask_or_punctuation_in_angle(self):
        predictor = ScriptedPredictor(["and", "so", "then", "?"])
        result = fill_angle("t", "p", 12, predictor)
        for token in result["tokens"]:
            assert token != MASK
            assert not is_punctuation(token)

    def test_sequence_shape(self):
        state = FillState(topic_tokens=["a", "b"], punchline_tokens=["p"])
        state.generated = ["x"]
        assert state.sequence() == ["a", "b", MASK, "x", "p"]

    def test_punctuation_definition(self):
        assert is_punctuation(",")
        assert is_punctuation("?!...")
        assert not is_punctuation("word")
        assert not is_punctuation("don't")
        assert not is_punctuation("x3")
