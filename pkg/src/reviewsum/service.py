"""HTTP service exposing the summarization pipeline under /api/v1.

State is loaded once at startup and never mutated afterwards; concurrent
summarize requests each run the pipeline independently over it. The CLI and
this service share the same orchestration and serialization code, so their
summary payloads are byte-identical for identical inputs.
"""

from __future__ import annotations

import logging
import uuid
from dataclasses import asdict
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .errors import ControlsError, UnknownPlaceError
from .summarizer import ControlParams, Engine, render_summary_json

log = logging.getLogger(__name__)

API_PREFIX = "/api/v1"


class SummarizeRequest(BaseModel):
    place: str
    aspects: list[str] | str = "all"
    length_words: int = 100
    female_ratio: float = 0.5
    penalty_weight: float | None = None
    candidate_pool: int | None = None


def create_app(engine: Engine | None, ui_dir: str | Path | None = None) -> FastAPI:
    """Build the application; a None engine serves 503 on every API route."""
    app = FastAPI(title="reviewsum", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def _bad_request(request: Request, exc: RequestValidationError):
        fields = {
            ".".join(str(part) for part in err["loc"][1:]) or "body": err["msg"]
            for err in exc.errors()
        }
        return JSONResponse(status_code=400, content={"error": "invalid request", "fields": fields})

    class ServiceUnavailable(Exception):
        pass

    @app.exception_handler(ServiceUnavailable)
    async def _unavailable(request: Request, exc: ServiceUnavailable):
        return JSONResponse(
            status_code=503,
            content={"error": "service not initialized: no corpus data loaded"},
        )

    def _require_engine() -> Engine:
        if engine is None:
            raise ServiceUnavailable()
        return engine

    @app.get(API_PREFIX + "/places")
    def places():
        eng = _require_engine()
        out = []
        for place in eng.places():
            stats = eng.corpus(place).stats
            out.append({"place": place, "stats": asdict(stats)})
        return out

    @app.get(API_PREFIX + "/aspects")
    def aspects():
        eng = _require_engine()
        return [
            {"label": c.label, "terms": list(c.terms)} for c in eng.catalog.classes
        ]

    @app.post(API_PREFIX + "/summarize")
    def summarize(payload: SummarizeRequest):
        eng = _require_engine()
        overrides = {}
        if payload.penalty_weight is not None:
            overrides["penalty_weight"] = payload.penalty_weight
        if payload.candidate_pool is not None:
            overrides["candidate_pool"] = payload.candidate_pool
        controls = ControlParams(
            place=payload.place,
            aspects=payload.aspects,
            length_words=payload.length_words,
            female_ratio=payload.female_ratio,
            **overrides,
        )
        try:
            summary = eng.summarize(controls.checked())
        except ControlsError as exc:
            return JSONResponse(
                status_code=400, content={"error": str(exc), "fields": exc.fields}
            )
        except UnknownPlaceError as exc:
            return JSONResponse(status_code=404, content={"error": str(exc)})
        except Exception:
            request_id = uuid.uuid4().hex
            log.exception("summarize failed (request id %s)", request_id)
            return JSONResponse(
                status_code=500,
                content={"error": "internal error", "request_id": request_id},
            )
        return Response(content=render_summary_json(summary), media_type="application/json")

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
