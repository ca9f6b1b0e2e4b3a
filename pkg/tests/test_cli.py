import json

import pytest

from corpus import CORPUS
from wisecrack.cli import EXIT_BUILD, EXIT_OK, EXIT_USAGE, NO_JOKE, main

from conftest import WALKTHROUGH_TOPICS

FLUPIDITY_SENTENCE = WALKTHROUGH_TOPICS[2][0]


def write_jsonl(path, sentences):
    path.write_text("\n".join(json.dumps({"input": s}) for s in sentences) + "\n")


class TestRespond:
    def test_walkthrough_response(self, capsys):
        assert main(["--seed", "0", "respond", FLUPIDITY_SENTENCE]) == EXIT_OK
        out = capsys.readouterr().out.strip()
        assert out.endswith("flupidity.")
        assert out.startswith("Virus stupidity? ")

    def test_no_joke_marker(self, capsys):
        assert main(["respond", "Hello there."]) == EXIT_OK
        assert capsys.readouterr().out.strip() == NO_JOKE

    def test_explain_does_not_change_response(self, capsys):
        main(["--seed", "0", "respond", FLUPIDITY_SENTENCE])
        plain = capsys.readouterr().out
        main(["--seed", "0", "--explain", "respond", FLUPIDITY_SENTENCE])
        explained = capsys.readouterr()
        assert explained.out == plain
        assert "portmanteau" in explained.err

    def test_threshold_flag(self, capsys):
        assert main(["--threshold", "99", "respond", FLUPIDITY_SENTENCE]) == EXIT_OK
        assert capsys.readouterr().out.strip() == NO_JOKE


class TestScore:
    def test_subscore_table(self, capsys):
        assert main(["score", "cat", "bat"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "edit_sub" in out
        assert "0.666667" in out
        assert "total" in out

    def test_identical_pair_usage_error(self, capsys):
        assert main(["score", "cat", "Cat"]) == EXIT_USAGE


class TestBatch:
    def test_cardinality_and_order(self, tmp_path, capsys):
        sentences = CORPUS[:3]
        source = tmp_path / "in.jsonl"
        sink = tmp_path / "out.jsonl"
        write_jsonl(source, sentences)
        assert main(["--seed", "0", "batch", "--in", str(source), "--out", str(sink)]) == EXIT_OK
        records = [json.loads(line) for line in sink.read_text().splitlines()]
        assert len(records) == 3
        assert [r["input"] for r in records] == sentences

    def test_record_fields(self, tmp_path):
        source = tmp_path / "in.jsonl"
        sink = tmp_path / "out.jsonl"
        write_jsonl(source, [FLUPIDITY_SENTENCE, "Hello there."])
        main(["--seed", "0", "batch", "--in", str(source), "--out", str(sink)])
        hit, miss = [json.loads(line) for line in sink.read_text().splitlines()]
        assert hit["responded"] is True
        assert hit["punchline"]["kind"] == "portmanteau"
        assert hit["punchline"]["text"] == "flupidity"
        assert hit["keywords"] == ["virus", "stupidity"]
        assert miss == {
            "input": "Hello there.",
            "response": None,
            "responded": False,
            "keywords": None,
            "punchline": None,
        }

    def test_invalid_json_line_yields_error_record(self, tmp_path):
        source = tmp_path / "in.jsonl"
        sink = tmp_path / "out.jsonl"
        source.write_text('{"input": "Hello there."}\nnot json at all\n{"wrong": 1}\n')
        assert main(["batch", "--in", str(source), "--out", str(sink)]) == EXIT_OK
        records = [json.loads(line) for line in sink.read_text().splitlines()]
        assert len(records) == 3
        assert "error" in records[1]
        assert records[1]["responded"] is False
        assert "error" in records[2]

    def test_missing_input_file(self, tmp_path, capsys):
        code = main(["batch", "--in", str(tmp_path / "nope"), "--out", str(tmp_path / "o")])
        assert code == EXIT_BUILD

    def test_explain_adds_candidates(self, tmp_path):
        source = tmp_path / "in.jsonl"
        sink = tmp_path / "out.jsonl"
        write_jsonl(source, [FLUPIDITY_SENTENCE])
        main(["--seed", "0", "--explain", "batch", "--in", str(source), "--out", str(sink)])
        record = json.loads(sink.read_text().splitlines()[0])
        assert record["candidates"]
        assert {c["kind"] for c in record["candidates"]} >= {"portmanteau"}


class TestRepl:
    def test_reads_until_eof(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr(
            "sys.stdin", io.StringIO(f"{FLUPIDITY_SENTENCE}\n\nHello there.\n")
        )
        assert main(["--seed", "0", "repl"]) == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 2
        assert lines[0].endswith("flupidity.")
        assert lines[1] == NO_JOKE


class TestUsage:
    def test_no_command_usage_error(self, capsys):
        assert main([]) == EXIT_USAGE

    def test_unknown_flag_usage_error(self, capsys):
        assert main(["--bogus", "respond", "x"]) == EXIT_USAGE

    def test_version_exits_zero(self, capsys):
        assert main(["--version"]) == EXIT_OK
        assert "wisecrack" in capsys.readouterr().out

    def test_bad_config_build_error(self, tmp_path, capsys):
        assert main(["--config", str(tmp_path / "nope.ini"), "respond", "x"]) == EXIT_BUILD
