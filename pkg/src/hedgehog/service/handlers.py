"""Command dispatch shared by the HTTP endpoints and the CLI.

Each handler takes the raw (already schema-shaped) payload dict, decodes
it to domain objects, runs the library, and returns a JSON-ready dict.
ValueError means malformed input; HedgehogError means a domain error.
"""

from __future__ import annotations

from typing import Any, Callable

from .. import balls, embeddings, extension, report, sets
from ..metricspace import bound_metric
from ..rational import format_fraction, parse_fraction
from ..serialization import (
    decode_pair,
    decode_point,
    decode_set,
    decode_space,
    decode_universe,
    encode_basis,
    encode_embedding,
    encode_extension,
    encode_pair,
    encode_refinement,
    encode_separation,
    encode_set,
    encode_verification,
)


def handle_classify(payload: dict) -> dict:
    verdict = sets.classify_open(decode_set(payload))
    return verdict.as_dict()


def handle_closure(payload: dict) -> dict:
    A = decode_set(payload["set"])
    topology = sets.Topology(payload["topology"])
    return encode_set(sets.closure(A, topology))


def handle_ball(payload: dict) -> dict:
    universe = decode_universe(payload["universe"])
    center = decode_point(payload["center"])
    radius = parse_fraction(payload["radius"])
    return encode_set(balls.ball(universe, center, radius, payload.get("kind", "open")))


def handle_embed_real(payload: dict) -> dict:
    return encode_pair(embeddings.embed_real(parse_fraction(payload["x"])))


def handle_invert_real(payload: dict) -> dict:
    pair = decode_pair(payload)
    return {"x": format_fraction(embeddings.invert_real(pair))}


def handle_fan(payload: dict) -> dict:
    x, y = embeddings.fan_map(
        parse_fraction(payload["height"]), parse_fraction(payload["label"])
    )
    return {"x": format_fraction(x), "y": format_fraction(y)}


def handle_stone(payload: dict) -> dict:
    space = decode_space(payload["space"])
    cover = payload["cover"]["sets"]
    refinement = embeddings.stone_refine(space, cover, payload.get("max_level"))
    return encode_refinement(refinement)


def handle_basis(payload: dict) -> dict:
    space = decode_space(payload["space"])
    return encode_basis(embeddings.sigma_discrete_basis(space, payload.get("resolution")))


def handle_kowalsky(payload: dict) -> dict:
    space = bound_metric(decode_space(payload["space"]))
    basis = embeddings.sigma_discrete_basis(space, payload.get("resolution"))
    embedding = embeddings.kowalsky_embed(space, basis)
    separation = embeddings.check_separation(
        embedding, space, subset_samples=payload.get("subset_samples")
    )
    out = encode_embedding(embedding)
    out["separation"] = encode_separation(separation)
    return out


def handle_extend(payload: dict) -> dict:
    space = decode_space(payload["space"])
    universe = decode_universe(payload["universe"])
    mapping = {label: decode_point(p) for label, p in payload["map"].items()}
    result = extension.hedgehog_extend(space, payload["domain"], mapping, universe)
    verification = extension.verify_extension(space, result, payload["domain"], mapping)
    out = encode_extension(result)
    out["verification"] = encode_verification(verification)
    return out


def handle_subcover(payload: dict) -> dict:
    stream = [decode_set(s) for s in payload["stream"]]
    result = sets.extract_finite_subcover(stream, payload.get("bound", 100))
    return {
        "indices": list(result.indices),
        "sets": [encode_set(s) for s in result.sets],
    }


def handle_report(payload: dict) -> dict:
    cells = report.build_report(
        kappas=payload.get("kappas") or [1, 3],
        seed=payload.get("seed", 0),
        force_fail=payload.get("self_test_fail", False),
    )
    failures = report.report_failures(cells)
    return {
        "cells": [c.as_dict() for c in cells],
        "failures": [c.as_dict() for c in failures],
        "table": report.render_table(cells),
    }


HANDLERS: dict[str, Callable[[dict], dict]] = {
    "classify": handle_classify,
    "closure": handle_closure,
    "ball": handle_ball,
    "embed-real": handle_embed_real,
    "invert-real": handle_invert_real,
    "fan": handle_fan,
    "stone": handle_stone,
    "basis": handle_basis,
    "kowalsky": handle_kowalsky,
    "extend": handle_extend,
    "subcover": handle_subcover,
    "report": handle_report,
}


def dispatch(command: str, payload: Any) -> dict:
    if command not in HANDLERS:
        raise ValueError(f"unknown command {command!r}")
    if not isinstance(payload, dict):
        raise ValueError("payload must be a JSON object")
    try:
        return HANDLERS[command](payload)
    except KeyError as exc:
        raise ValueError(f"missing field {exc.args[0]!r}") from exc
    except (TypeError, AttributeError) as exc:
        raise ValueError(f"malformed payload: {exc}") from exc
