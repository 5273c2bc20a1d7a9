"""File-driven command surface.

Thin client over the service handlers: each subcommand shapes a request
payload from a JSON file and/or flags, runs it in-process (or POSTs it
to a running service with --url), and prints the JSON verdict.

Exit codes: 0 ok, 1 malformed input, 2 domain error, 3 internal breach.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .errors import HedgehogError
from .service.handlers import dispatch

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_DOMAIN = 2
EXIT_INTERNAL = 3


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(
            f"malformed JSON in {path} at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def _remote(url: str, command: str, payload: dict) -> dict:
    import httpx

    response = httpx.post(f"{url.rstrip('/')}/{command}", json=payload, timeout=120)
    if response.status_code == 400:
        detail = response.json().get("detail", {})
        raise HedgehogError(f"{detail.get('error')}: {detail.get('message')}")
    if response.status_code == 422:
        raise ValueError(f"service rejected the payload: {response.text}")
    response.raise_for_status()
    return response.json()


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hedgehog", description="exact hedgehog-topology toolkit"
    )
    parser.add_argument("--url", help="POST to a running service instead of in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="openness in the three topologies")
    p.add_argument("input", help="HedgehogSet JSON file")

    p = sub.add_parser("closure", help="closure in one topology")
    p.add_argument("input", help="HedgehogSet JSON file")
    p.add_argument("--topology", required=True, choices=["quotient", "metric", "compact"])

    p = sub.add_parser("ball", help="exact metric ball as a set")
    p.add_argument("input", help="JSON with universe, center, radius, kind")

    p = sub.add_parser("embed-real", help="embed a rational into the hedgehog square")
    p.add_argument("--x", required=True, help='rational, e.g. "1/2" or "-3"')

    p = sub.add_parser("invert-real", help="invert the real-line embedding")
    p.add_argument("input", help="PointPair JSON file")

    p = sub.add_parser("fan", help="plane fan map of one point")
    p.add_argument("--height", required=True)
    p.add_argument("--label", required=True)

    p = sub.add_parser("stone", help="sigma-discrete open refinement of a cover")
    p.add_argument("input", help="JSON with space, cover, optional max_level")

    p = sub.add_parser("basis", help="sigma-discrete basis of a finite metric space")
    p.add_argument("input", help="JSON with space, optional resolution")

    p = sub.add_parser("kowalsky", help="diagonal embedding into hedgehog levels")
    p.add_argument("input", help="JSON with space, optional resolution/subset_samples")

    p = sub.add_parser("extend", help="hedgehog-valued extension from a subspace")
    p.add_argument("input", help="JSON with space, domain, map, universe")

    p = sub.add_parser("subcover", help="finite subcover from a compact-open stream")
    p.add_argument("input", help="JSON with stream, optional bound")

    p = sub.add_parser("report", help="summary table with executable witnesses")
    p.add_argument("--kappa", type=int, action="append", help="finite regime sample(s)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="emit ReportCell array")
    p.add_argument("--self-test-fail", action="store_true", help="inject a contradiction")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


def _payload_for(args: argparse.Namespace) -> dict:
    command = args.command
    if command in ("classify", "invert-real", "stone", "basis", "kowalsky", "extend", "subcover"):
        return _load_json(args.input)
    if command == "closure":
        return {"set": _load_json(args.input), "topology": args.topology}
    if command == "ball":
        return _load_json(args.input)
    if command == "embed-real":
        return {"x": args.x}
    if command == "fan":
        return {"height": args.height, "label": args.label}
    if command == "report":
        return {
            "kappas": args.kappa or [1, 3],
            "seed": args.seed,
            "self_test_fail": args.self_test_fail,
        }
    raise ValueError(f"unknown command {command!r}")


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)

    if args.command == "serve":
        import uvicorn

        uvicorn.run("hedgehog.service.app:app", host=args.host, port=args.port)
        return EXIT_OK

    try:
        payload = _payload_for(args)
        if args.url:
            result = _remote(args.url, args.command, payload)
        else:
            result = dispatch(args.command, payload)
    except ValueError as exc:
        print(json.dumps({"error": "MalformedInput", "message": str(exc)}), file=sys.stderr)
        return EXIT_MALFORMED
    except HedgehogError as exc:
        print(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}),
            file=sys.stderr,
        )
        return EXIT_DOMAIN
    except Exception as exc:  # noqa: BLE001 - invariant breaches surface as exit 3
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_INTERNAL

    if args.command == "report":
        failures = result.get("failures", [])
        if args.json:
            print(json.dumps(result["cells"], indent=2))
        else:
            print(result["table"])
        if failures:
            print(
                json.dumps({"error": "ReportContradiction", "cells": failures}),
                file=sys.stderr,
            )
            return EXIT_DOMAIN
        return EXIT_OK

    print(json.dumps(result, indent=2))
    return EXIT_OK


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
