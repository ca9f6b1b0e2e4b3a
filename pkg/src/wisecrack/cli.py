"""Command-line front end: single response, REPL, batch JSONL, pair scoring."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import __version__
from .engine import BuildError, EngineConfig, build, default_config, load_config
from .response import JokeResponse
from .wordplay import RejectedPairError, wordplay_score

NO_JOKE = "[no joke]"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUILD = 3


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wisecrack",
        description="Improvise a wordplay joke response to a topic sentence.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help="path to an INI config file")
    parser.add_argument("--seed", type=int, help="override the engine seed")
    parser.add_argument("--threshold", type=float, help="override the wordplay threshold")
    parser.add_argument(
        "--angle-provider", choices=["template", "remote"], help="angle source"
    )
    parser.add_argument("--angle-url", help="base URL of the remote angle service")
    parser.add_argument(
        "--explain", action="store_true", help="include all punch-line candidates"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    respond = commands.add_parser("respond", help="respond to one sentence")
    respond.add_argument("sentence")

    commands.add_parser("repl", help="read sentences from stdin until EOF")

    batch = commands.add_parser("batch", help="map a JSONL file of inputs to responses")
    batch.add_argument("--in", dest="in_path", required=True)
    batch.add_argument("--out", dest="out_path", required=True)

    score = commands.add_parser("score", help="print the wordplay subscores for a pair")
    score.add_argument("word1")
    score.add_argument("word2")
    return parser


def _configure(args: argparse.Namespace) -> EngineConfig:
    config = load_config(args.config) if args.config else default_config()
    if args.seed is not None:
        config = replace(config, seed=args.seed)
    if args.threshold is not None:
        config = replace(config, wordplay=replace(config.wordplay, threshold=args.threshold))
    if args.angle_url:
        config = replace(config, angle_url=args.angle_url, angle_provider="remote")
    if args.angle_provider:
        config = replace(config, angle_provider=args.angle_provider)
    return config


def _candidate_dump(response: JokeResponse) -> list[dict]:
    return [
        {"kind": c.kind, "text": c.text, "score_total": c.score.total}
        for c in response.candidates
    ]


def _batch_record(line: str, engine, explain: bool) -> dict:
    try:
        payload = json.loads(line)
        sentence = payload["input"]
        if not isinstance(sentence, str):
            raise TypeError("input must be a string")
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        return {
            "input": line,
            "response": None,
            "responded": False,
            "keywords": None,
            "punchline": None,
            "error": f"invalid input line: {exc}",
        }
    response = engine.respond(sentence)
    record = {
        "input": sentence,
        "response": response.text if response.responded else None,
        "responded": response.responded,
        "keywords": list(response.keywords) if response.keywords else None,
        "punchline": None,
    }
    if response.responded:
        best = next(c for c in response.candidates if c.text == response.punchline)
        record["punchline"] = {
            "kind": best.kind,
            "text": best.text,
            "score_total": best.score.total,
        }
    if explain:
        record["candidates"] = _candidate_dump(response)
    return record


def _run_respond(engine, sentence: str, explain: bool) -> int:
    response = engine.respond(sentence)
    print(response.text if response.responded else NO_JOKE)
    if explain:
        for candidate in response.candidates:
            print(
                f"  [{candidate.kind}] {candidate.text!r} "
                f"total={candidate.score.total:.3f}",
                file=sys.stderr,
            )
    return EXIT_OK


def _run_repl(engine, explain: bool) -> int:
    for line in sys.stdin:
        sentence = line.strip()
        if not sentence:
            continue
        _run_respond(engine, sentence, explain)
        sys.stdout.flush()
    return EXIT_OK


def _run_batch(engine, in_path: str, out_path: str, explain: bool) -> int:
    try:
        lines = Path(in_path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        print(f"error: cannot read {in_path}: {exc}", file=sys.stderr)
        return EXIT_BUILD
    records = [
        json.dumps(_batch_record(line, engine, explain)) for line in lines if line.strip()
    ]
    Path(out_path).write_text("\n".join(records) + ("\n" if records else ""), encoding="utf-8")
    return EXIT_OK


def _run_score(engine, word1: str, word2: str) -> int:
    try:
        score = wordplay_score(word1, word2, engine.lexicon, engine.config.wordplay)
    except RejectedPairError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for name in ("edit_sub", "allit_sub", "asson_sub", "stop_sub", "end_sub", "syll_sub"):
        print(f"{name:10} {getattr(score, name):.6f}")
    print(f"{'total':10} {score.total:.6f}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        engine = build(_configure(args))
    except (BuildError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUILD
    if args.command == "respond":
        return _run_respond(engine, args.sentence, args.explain)
    if args.command == "repl":
        return _run_repl(engine, args.explain)
    if args.command == "batch":
        return _run_batch(engine, args.in_path, args.out_path, args.explain)
    if args.command == "score":
        return _run_score(engine, args.word1, args.word2)
    return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
