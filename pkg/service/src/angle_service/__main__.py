import argparse

import uvicorn

from .app import create_app
from .models import load_predictor


def main() -> None:
    parser = argparse.ArgumentParser(prog="angle-service")
    parser.add_argument("--model", default="stub", help="stub or transformers:<name>")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8571)
    args = parser.parse_args()
    app = create_app(lambda: load_predictor(args.model))
    uvicorn.run(app, host=args.host, port=args.port)


if __name__ == "__main__":
    main()
