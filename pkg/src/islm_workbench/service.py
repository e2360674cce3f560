"""Stateless JSON-over-HTTP compute service.

Every request carries the full scenario state; no session storage exists, so
identical bodies always produce identical responses. All success bodies are
rendered through the same canonical serializer the CLI uses, which keeps the
two front ends byte-compatible. Every non-2xx body is an ApiError object.
"""

from __future__ import annotations

import argparse
import os

from fastapi import FastAPI, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware

from .errors import (
    InvalidParameters,
    InvalidRegime,
    OutOfRange,
    UnknownPlot,
    WorkbenchError,
)
from .scenarios import parse_plot
from .schema import (
    DEFAULT_DOCUMENT_JSON,
    ApiErrorModel,
    CompareRequest,
    CurvesRequest,
    ScenarioDocument,
    build_compare_response,
    build_curves_response,
    build_solve_response,
    canonical_json,
    field_path_from_loc,
)

MAX_BODY_BYTES = 64 * 1024

DEFAULT_HOST = "127.0.0.1"
DEFAULT_PORT = 8080


def _json(model, status: int = 200, headers: dict[str, str] | None = None) -> Response:
    return Response(
        content=canonical_json(model),
        status_code=status,
        media_type="application/json",
        headers=headers,
    )


def _error(status: int, code: str, message: str, field_path: str | None = None) -> Response:
    return _json(
        ApiErrorModel(code=code, message=message, field_path=field_path), status=status
    )


class BodySizeLimitMiddleware:
    """Reject bodies whose declared length exceeds the cap, before parsing."""

    def __init__(self, app, max_bytes: int = MAX_BODY_BYTES):
        self.app = app
        self.max_bytes = max_bytes

    async def __call__(self, scope, receive, send):
        if scope["type"] == "http":
            for name, value in scope.get("headers", []):
                if name != b"content-length":
                    continue
                try:
                    length = int(value)
                except ValueError:
                    length = 0
                if length > self.max_bytes:
                    body = canonical_json(
                        ApiErrorModel(
                            code="BadRequest",
                            message=f"request body exceeds {self.max_bytes} bytes",
                        )
                    ).encode()
                    await send(
                        {
                            "type": "http.response.start",
                            "status": 413,
                            "headers": [(b"content-type", b"application/json")],
                        }
                    )
                    await send({"type": "http.response.body", "body": body})
                    return
        await self.app(scope, receive, send)


def _looks_like_parameter(path: str) -> bool:
    return "params" in path or "i_bar" in path


def create_app() -> FastAPI:
    app = FastAPI(title="islm-workbench", version="0.1.0")
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"])
    app.add_middleware(BodySizeLimitMiddleware)

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request, exc: RequestValidationError):
        errors = exc.errors()
        if not errors:
            return _error(400, "BadRequest", "invalid request body")
        message = "; ".join(
            f"{field_path_from_loc(tuple(e['loc']))}: {e['msg']}" for e in errors
        )
        path = field_path_from_loc(tuple(errors[0]["loc"])) or None
        code = "InvalidParameters" if path and _looks_like_parameter(path) else "BadRequest"
        return _error(400, code, message, field_path=path)

    @app.exception_handler(WorkbenchError)
    async def on_domain_error(request, exc: WorkbenchError):
        if isinstance(exc, UnknownPlot):
            code = "UnknownPlot"
        elif isinstance(exc, (OutOfRange, InvalidParameters, InvalidRegime)):
            code = "InvalidParameters"
        else:
            code = "BadRequest"
        return _error(400, code, str(exc))

    @app.exception_handler(Exception)
    async def on_internal_error(request, exc: Exception):
        return _error(500, "Internal", "internal error")

    @app.get("/healthz")
    async def healthz():
        return Response(content="ok\n", media_type="text/plain")

    @app.get("/api/v1/defaults")
    async def defaults():
        return Response(
            content=DEFAULT_DOCUMENT_JSON,
            media_type="application/json",
            headers={"Cache-Control": "public, max-age=86400"},
        )

    @app.post("/api/v1/solve")
    async def solve(document: ScenarioDocument):
        return _json(build_solve_response(document))

    @app.post("/api/v1/curves")
    async def curves(req: CurvesRequest):
        plot = parse_plot(req.plot)
        grid = req.grid.to_spec() if req.grid is not None else None
        return _json(build_curves_response(req.document, plot, slot=req.slot, grid=grid))

    @app.post("/api/v1/compare")
    async def compare_slots(req: CompareRequest):
        return _json(build_compare_response(req.document, req.slots))

    return app


app = create_app()


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="islm-api", description="Run the compute service.")
    parser.add_argument("--host", default=os.environ.get("ISLM_API_HOST", DEFAULT_HOST))
    parser.add_argument(
        "--port", type=int, default=int(os.environ.get("ISLM_API_PORT", DEFAULT_PORT))
    )
    args = parser.parse_args(argv)

    import uvicorn

    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
