"""HTTP facade: evaluation, sweeps, and the scenario store over JSON.

Request bodies are parsed with the same strict scenario parser the CLI uses,
not with per-endpoint request models, so there is a single schema
implementation in the whole artifact and the two surfaces cannot drift.
Numbers in responses are full precision; rounding is the client's job.

No authentication: this is a workstation/LAN tool by design.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, PlainTextResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from .core import DomainError
from .formatting import decision_document, sweep_document
from .scenarios import (
    ScenarioFormatError,
    has_errors,
    parse_scenario,
    scenario_to_document,
    validate_scenario,
)
from .store import (
    DuplicateScenario,
    InvalidName,
    RevisionMismatch,
    ScenarioStore,
    UnknownScenario,
)
from .sweeps import Axis, SweepSpec, recommend_scenario, run_sweep

_AXIS_ALIASES = {
    "p": Axis.SALE_PROBABILITY,
    "sale_probability": Axis.SALE_PROBABILITY,
    "x": Axis.EXTRA_QTY,
    "extra_qty": Axis.EXTRA_QTY,
    "days": Axis.STORAGE_DAYS,
    "storage_days": Axis.STORAGE_DAYS,
}

_SWEEP_BODY_KEYS = {"scenario", "axis", "values"}


def _error(status: int, code: str, message: str, field: str | None = None) -> JSONResponse:
    body: dict = {"code": code, "message": message}
    if field:
        body["field"] = field
    return JSONResponse(status_code=status, content=body)


async def _json_body(request: Request) -> object:
    try:
        return json.loads(await request.body())
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ScenarioFormatError(f"parse error: {exc}") from exc


def _parse_axis(raw: object) -> Axis:
    if isinstance(raw, str) and raw in _AXIS_ALIASES:
        return _AXIS_ALIASES[raw]
    valid = ", ".join(sorted(set(_AXIS_ALIASES)))
    raise ScenarioFormatError(f"unknown axis {raw!r} (valid: {valid})", field="axis")


def _parse_values(raw: object) -> tuple[float, ...]:
    if not isinstance(raw, list) or not raw:
        raise ScenarioFormatError("values must be a non-empty array", field="values")
    out = []
    for v in raw:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ScenarioFormatError("values must be numbers", field="values")
        out.append(float(v))
    return tuple(out)


def create_app(store_dir: str | Path, ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="lotwise", docs_url=None, redoc_url=None)
    store = ScenarioStore(store_dir)

    @app.exception_handler(ScenarioFormatError)
    async def _format_error(request: Request, exc: ScenarioFormatError):
        return _error(400, "invalid_scenario", str(exc), getattr(exc, "field", None))

    @app.exception_handler(DomainError)
    async def _domain_error(request: Request, exc: DomainError):
        return _error(400, "domain_error", str(exc))

    @app.exception_handler(StarletteHTTPException)
    async def _http_error(request: Request, exc: StarletteHTTPException):
        code = {404: "not_found", 405: "method_not_allowed"}.get(exc.status_code, "http_error")
        return _error(exc.status_code, code, str(exc.detail))

    @app.exception_handler(RequestValidationError)
    async def _request_error(request: Request, exc: RequestValidationError):
        return _error(400, "invalid_request", str(exc))

    @app.get("/healthz")
    async def healthz() -> PlainTextResponse:
        return PlainTextResponse("ok")

    @app.post("/api/v1/evaluate")
    async def evaluate(request: Request) -> JSONResponse:
        scenario = parse_scenario(await _json_body(request))
        issues = validate_scenario(scenario)
        if has_errors(issues):
            first = next(i for i in issues if i.severity == "error")
            return _error(400, "validation_error", first.message, first.field)
        rec = recommend_scenario(scenario)
        return JSONResponse(decision_document(scenario.name, rec, issues))

    @app.post("/api/v1/sweep")
    async def sweep(request: Request) -> JSONResponse:
        body = await _json_body(request)
        if not isinstance(body, dict):
            raise ScenarioFormatError("sweep request must be an object")
        for key in sorted(body):
            if key not in _SWEEP_BODY_KEYS:
                raise ScenarioFormatError(f"unknown key: {key}", field=key)
        for key in ("scenario", "axis", "values"):
            if key not in body:
                raise ScenarioFormatError(f"missing required field: {key}", field=key)
        scenario = parse_scenario(body["scenario"])
        issues = validate_scenario(scenario)
        if has_errors(issues):
            first = next(i for i in issues if i.severity == "error")
            return _error(400, "validation_error", first.message, first.field)
        spec = SweepSpec(axis=_parse_axis(body["axis"]), values=_parse_values(body["values"]))
        return JSONResponse(sweep_document(run_sweep(scenario, spec)))

    @app.post("/api/v1/scenarios")
    async def create_scenario(request: Request) -> JSONResponse:
        scenario = parse_scenario(await _json_body(request))
        try:
            stored = store.create(scenario)
        except InvalidName as exc:
            return _error(400, "invalid_name", str(exc), "name")
        except DuplicateScenario:
            return _error(409, "duplicate_name", f"scenario {scenario.name!r} already exists", "name")
        return JSONResponse(
            {"name": scenario.name, "revision": stored.revision, "created_at": stored.created_at},
            status_code=201,
        )

    @app.get("/api/v1/scenarios")
    async def list_scenarios() -> JSONResponse:
        return JSONResponse(
            {
                "scenarios": [
                    {"name": name, "revision": revision, "created_at": created_at}
                    for name, revision, created_at in store.list()
                ]
            }
        )

    @app.get("/api/v1/scenarios/{name}")
    async def get_scenario(name: str) -> JSONResponse:
        try:
            stored = store.get(name)
        except InvalidName as exc:
            return _error(400, "invalid_name", str(exc), "name")
        except UnknownScenario:
            return _error(404, "unknown_scenario", f"no scenario named {name!r}")
        return JSONResponse(
            {
                "name": name,
                "revision": stored.revision,
                "created_at": stored.created_at,
                "scenario": scenario_to_document(stored.scenario),
            }
        )

    @app.put("/api/v1/scenarios/{name}")
    async def put_scenario(name: str, request: Request) -> JSONResponse:
        scenario = parse_scenario(await _json_body(request))
        if scenario.name != name:
            return _error(
                400, "name_mismatch",
                f"document name {scenario.name!r} does not match path name {name!r}", "name",
            )
        expected = None
        if_match = request.headers.get("if-match")
        if if_match is not None:
            try:
                expected = int(if_match.strip().strip('"'))
            except ValueError:
                return _error(400, "invalid_if_match", f"If-Match must be a revision number, got {if_match!r}")
        try:
            stored = store.replace(name, scenario, expected_revision=expected)
        except InvalidName as exc:
            return _error(400, "invalid_name", str(exc), "name")
        except UnknownScenario:
            return _error(404, "unknown_scenario", f"no scenario named {name!r}")
        except RevisionMismatch as exc:
            return _error(412, "revision_mismatch", str(exc))
        return JSONResponse(
            {"name": name, "revision": stored.revision, "created_at": stored.created_at}
        )

    @app.delete("/api/v1/scenarios/{name}", status_code=204)
    async def delete_scenario(name: str):
        try:
            store.delete(name)
        except InvalidName as exc:
            return _error(400, "invalid_name", str(exc), "name")
        except UnknownScenario:
            return _error(404, "unknown_scenario", f"no scenario named {name!r}")
        return PlainTextResponse(status_code=204, content="")

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
