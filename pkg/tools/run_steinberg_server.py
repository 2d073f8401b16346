"""Run the HTTP server for steinberg_rs.

Example:
  export STEINBERG_TRIALS=9
  python tools/run_steinberg_server.py --host=127.0.0.1 --port=8000

Then:
  curl -s localhost:8000/health
  curl -s -X POST localhost:8000/xi-s -H 'content-type: application/json' -d '{"word": [0, 1, 2]}'
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import uvicorn


def main() -> None:
    # `python tools/...` puts tools/ on the import path; add the repo root.
    project_root = Path(__file__).resolve().parent.parent
    sys.path.insert(0, str(project_root))

    parser = argparse.ArgumentParser()
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8000)
    parser.add_argument("--reload", action="store_true")
    args = parser.parse_args()

    if args.reload:
        uvicorn.run("steinberg_rs.server:app", host=args.host, port=args.port, reload=True, log_level="info")
        return

    from steinberg_rs.server import app

    uvicorn.run(app, host=args.host, port=args.port, log_level="info")


if __name__ == "__main__":
    main()
