"""FastAPI service wrapping the exact-topology library.

Every endpoint is a stateless pure function over its JSON body, so the
service is safe to scale horizontally; the CLI is a thin client of the
same handlers.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..errors import HedgehogError
from . import schemas
from .handlers import dispatch


def _run(command: str, payload: dict) -> dict:
    try:
        return dispatch(command, payload)
    except HedgehogError as exc:
        raise HTTPException(
            status_code=400,
            detail={"error": type(exc).__name__, "message": str(exc)},
        ) from exc
    except ValueError as exc:
        raise HTTPException(
            status_code=422,
            detail={"error": "MalformedInput", "message": str(exc)},
        ) from exc


def create_app() -> FastAPI:
    app = FastAPI(
        title="hedgehog-topology",
        description="Exact computations over the three hedgehog topologies",
    )

    @app.get("/healthz")
    def healthz() -> dict:
        return {"status": "ok"}

    @app.post("/classify", response_model=schemas.ClassifyResponse)
    def classify(body: schemas.HedgehogSetModel):
        return _run("classify", body.model_dump())

    @app.post("/closure", response_model=schemas.HedgehogSetModel)
    def closure(body: schemas.ClosureRequest):
        return _run("closure", body.model_dump())

    @app.post("/ball", response_model=schemas.HedgehogSetModel)
    def ball(body: schemas.BallRequest):
        return _run("ball", body.model_dump())

    @app.post("/embed-real", response_model=schemas.PointPairModel)
    def embed_real(body: schemas.EmbedRealRequest):
        return _run("embed-real", body.model_dump())

    @app.post("/invert-real", response_model=schemas.InvertRealResponse)
    def invert_real(body: schemas.PointPairModel):
        return _run("invert-real", body.model_dump())

    @app.post("/fan", response_model=schemas.FanResponse)
    def fan(body: schemas.FanRequest):
        return _run("fan", body.model_dump())

    @app.post("/stone")
    def stone(body: schemas.StoneRequest):
        return _run("stone", body.model_dump())

    @app.post("/basis")
    def basis(body: schemas.BasisRequest):
        return _run("basis", body.model_dump())

    @app.post("/kowalsky")
    def kowalsky(body: schemas.KowalskyRequest):
        return _run("kowalsky", body.model_dump())

    @app.post("/extend")
    def extend(body: schemas.ExtendRequest):
        return _run("extend", body.model_dump())

    @app.post("/subcover", response_model=schemas.SubcoverResponse)
    def subcover(body: schemas.SubcoverRequest):
        return _run("subcover", body.model_dump())

    @app.post("/report")
    def report(body: schemas.ReportRequest):
        return _run("report", body.model_dump())

    return app


app = create_app()
