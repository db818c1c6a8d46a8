"""Stateless JSON-over-HTTP facade over evaluation, sweep, and comparison.

Every request carries its knowledge base, so the service holds no
sessions and no caches: identical bodies produce identical responses, in
any order, with any number of requests in flight. Input problems come
back as 400 with a field path when one is known; computation problems as
422; both use the body shape ``{"error": string, "path": string|null}``.

Run with ``python -m ede.service`` (port from ``EDE_PORT``, default
8080). Static UI assets are served at ``/`` when a built frontend is
found (``EDE_UI_DIR`` overrides the default location).
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from .aggregation import evaluate_pipeline, sweep_factor
from .calculi import compare_calculi
from .core import (
    EvaluationOptions,
    KnowledgeBase,
    OutOfRangePolicy,
    ScaleKind,
    ValueObservation,
)
from .errors import DocumentError, EvaluationError, KbInvalidError
from .kbio import (
    FIELD_SCHEMA,
    evidence_from_obj,
    kb_document_from_obj,
    options_from_obj,
    sweep_row_to_obj,
    trace_to_obj,
)

ROUTES = ("POST /api/evaluate", "POST /api/sweep", "POST /api/compare",
          "GET /api/schema", "GET /healthz")


def _error_response(status: int, message: str, path: str | None = None) -> JSONResponse:
    return JSONResponse({"error": message, "path": path}, status_code=status)


def _require_request_fields(body: dict, required: tuple[str, ...], optional: tuple[str, ...]):
    unknown = sorted(set(body) - set(required) - set(optional))
    if unknown:
        raise DocumentError(f"unknown field(s): {', '.join(unknown)}")
    missing = sorted(set(required) - set(body))
    if missing:
        raise DocumentError(f"missing field(s): {', '.join(missing)}")


def _parse_request(body, required=("kb", "evidence"), optional=("options",)):
    if not isinstance(body, dict):
        raise DocumentError("request body must be a JSON object")
    _require_request_fields(body, required, optional)
    doc = kb_document_from_obj(body["kb"])
    if not isinstance(body["evidence"], list):
        raise DocumentError("expected an array", "evidence")
    evidence = evidence_from_obj(
        {"format_version": "1", "evidence": body["evidence"]}, doc.kb
    )
    opts = doc.options if doc.options is not None else EvaluationOptions()
    if "options" in body:
        opts = options_from_obj(body["options"], "options")
    return doc.kb, evidence, opts, body


def _clamp_warnings(kb: KnowledgeBase, evidence, opts: EvaluationOptions) -> list[str]:
    if opts.out_of_range_policy is not OutOfRangePolicy.CLAMP:
        return []
    warnings = []
    for item in evidence:
        factor = kb.factor(item.factor_id)
        obs = item.observation
        if (
            factor is not None
            and isinstance(obs, ValueObservation)
            and factor.scale.kind is ScaleKind.INTERVAL
            and not factor.scale.v_low <= obs.v <= factor.scale.v_high
        ):
            warnings.append(
                f"value {obs.v} for factor {factor.id!r} clamped into "
                f"[{factor.scale.v_low}, {factor.scale.v_high}]"
            )
    return warnings


async def _decoded_body(request: Request) -> dict:
    raw = await request.body()
    try:
        return json.loads(raw)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON body: {e.msg}") from e


def create_app(ui_dir: str | os.PathLike | None = None) -> FastAPI:
    app = FastAPI(title="ede", docs_url=None, redoc_url=None, openapi_url=None)

    @app.exception_handler(DocumentError)
    async def _document_error(_request, exc: DocumentError):
        return _error_response(400, exc.reason, exc.path)

    @app.exception_handler(KbInvalidError)
    async def _kb_invalid(_request, exc: KbInvalidError):
        return _error_response(400, str(exc))

    @app.exception_handler(EvaluationError)
    async def _evaluation_error(_request, exc: EvaluationError):
        return _error_response(422, str(exc))

    @app.exception_handler(StarletteHTTPException)
    async def _http_error(_request, exc: StarletteHTTPException):
        return _error_response(exc.status_code, str(exc.detail).lower())

    @app.get("/healthz")
    async def healthz():
        return {"status": "ok"}

    @app.get("/api/schema")
    async def schema():
        return {"routes": list(ROUTES), "schema": FIELD_SCHEMA}

    @app.post("/api/evaluate")
    async def evaluate(request: Request):
        kb, evidence, opts, _ = _parse_request(await _decoded_body(request))
        belief, trace = evaluate_pipeline(kb, evidence, opts)
        return {
            "belief": belief,
            "trace": trace_to_obj(trace)["stages"],
            "warnings": _clamp_warnings(kb, evidence, opts),
        }

    @app.post("/api/sweep")
    async def sweep(request: Request):
        body = await _decoded_body(request)
        kb, evidence, opts, body = _parse_request(
            body, required=("kb", "evidence", "factor_id", "steps"), optional=("options",)
        )
        factor_id = body["factor_id"]
        steps = body["steps"]
        if not isinstance(factor_id, str):
            raise DocumentError("expected a string", "factor_id")
        if isinstance(steps, bool) or not isinstance(steps, int) or steps < 2:
            raise DocumentError("steps must be an integer >= 2", "steps")
        rows = sweep_factor(kb, evidence, factor_id, steps, opts)
        return {"rows": [sweep_row_to_obj(r) for r in rows]}

    @app.post("/api/compare")
    async def compare(request: Request):
        kb, evidence, opts, _ = _parse_request(await _decoded_body(request))
        rows = compare_calculi(kb, evidence, opts)
        return {"rows": [{"calculus": r.calculus, "value": r.value} for r in rows]}

    static_dir = _find_ui_dir(ui_dir)
    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def _find_ui_dir(override: str | os.PathLike | None) -> Path | None:
    candidates = []
    if override is not None:
        candidates.append(Path(override))
    if os.environ.get("EDE_UI_DIR"):
        candidates.append(Path(os.environ["EDE_UI_DIR"]))
    candidates.append(Path(__file__).resolve().parents[2] / "frontend" / "dist")
    for c in candidates:
        if c.is_dir():
            return c
    return None


app = create_app()


def main() -> None:
    import uvicorn

    port = int(os.environ.get("EDE_PORT", "8080"))
    uvicorn.run(app, host="127.0.0.1", port=port, log_level="warning")


if __name__ == "__main__":
    main()
