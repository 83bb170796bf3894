"""Stateless HTTP facade over the pipeline.

Endpoints (JSON, UTF-8, ``schema_version`` echoed in every response):

    POST /api/analyze    {"text": ..., "options": {...}} -> analysis report
    GET  /api/suggest    ?word=W&k=N                     -> ranked suggestions
    POST /api/phonemize  {"words": [...]}                -> positional phonemes

The lexicon and tables are loaded once at startup and shared read-only, so
identical requests yield identical responses under any interleaving. The UI
holds the document being edited; there is no server-side session.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field
from starlette.exceptions import HTTPException as StarletteHTTPException

from .errors import FrontendError
from .g2p import g2p
from .pipeline import SCHEMA_VERSION, PipelineConfig, PipelineData, analyze, load_data
from .spellcheck import suggest

DEFAULT_MAX_TEXT_BYTES = 64 * 1024


@dataclass(frozen=True)
class ServiceConfig:
    data_dir: str | Path | None = None
    lexicon_path: str | Path | None = None
    abbrev_path: str | Path | None = None
    numbers_path: str | Path | None = None
    symbols_path: str | Path | None = None
    max_text_bytes: int = DEFAULT_MAX_TEXT_BYTES
    cors_origins: tuple[str, ...] = ()
    static_dir: str | Path | None = None  # serve the UI from '/' when set
    defaults: PipelineConfig = field(
        default_factory=lambda: PipelineConfig(auto_correct=False)
    )


class AnalyzeOptions(BaseModel):
    topk: int = Field(default=5, ge=1, le=50)
    max_distance: int = Field(default=2, ge=1, le=4)
    auto_correct: bool = False


class AnalyzeRequest(BaseModel):
    text: str
    options: AnalyzeOptions = AnalyzeOptions()


class PhonemizeRequest(BaseModel):
    words: list[str]


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    """Build the application; data files load eagerly so a bad configuration
    fails at startup rather than per-request."""
    config = config or ServiceConfig()
    data: PipelineData = load_data(
        config.data_dir,
        lexicon_path=config.lexicon_path,
        abbrev_path=config.abbrev_path,
        numbers_path=config.numbers_path,
        symbols_path=config.symbols_path,
    )
    app = FastAPI(title="hindi-tts-frontend", version=SCHEMA_VERSION)

    if config.cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(config.cors_origins),
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(
            {"schema_version": SCHEMA_VERSION, "detail": "malformed request"},
            status_code=400,
        )

    @app.exception_handler(StarletteHTTPException)
    async def http_error(request: Request, exc: StarletteHTTPException):
        return JSONResponse(
            {"schema_version": SCHEMA_VERSION, "detail": str(exc.detail)},
            status_code=exc.status_code,
        )

    @app.middleware("http")
    async def limit_body(request: Request, call_next):
        if request.method == "POST":
            body = await request.body()
            if len(body) > config.max_text_bytes:
                return JSONResponse(
                    {
                        "schema_version": SCHEMA_VERSION,
                        "detail": f"body exceeds {config.max_text_bytes} bytes",
                    },
                    status_code=413,
                )
        return await call_next(request)

    @app.post("/api/analyze")
    def api_analyze(req: AnalyzeRequest) -> JSONResponse:
        pipeline_config = PipelineConfig(
            top_k=req.options.topk,
            max_distance=req.options.max_distance,
            auto_correct=req.options.auto_correct,
            year_triggers=config.defaults.year_triggers,
        )
        report = analyze(req.text, pipeline_config, data)
        return JSONResponse(report.to_dict())

    @app.get("/api/suggest")
    def api_suggest(
        word: str = Query(default=""),
        k: int = Query(default=5, ge=1, le=50),
        max_distance: int = Query(default=2, ge=1, le=4),
    ) -> JSONResponse:
        if not word:
            return JSONResponse(
                {"schema_version": SCHEMA_VERSION, "detail": "missing word"},
                status_code=400,
            )
        options = suggest(word, data.lexicon, k=k, max_distance=max_distance)
        return JSONResponse(
            {
                "schema_version": SCHEMA_VERSION,
                "word": word,
                "suggestions": [
                    {
                        "candidate": s.candidate,
                        "distance": s.distance,
                        "frequency": s.frequency,
                        "rank": s.rank,
                    }
                    for s in options
                ],
            }
        )

    @app.post("/api/phonemize")
    def api_phonemize(req: PhonemizeRequest) -> JSONResponse:
        phonemes: list[str | None] = []
        errors: list[dict] = []
        for i, word in enumerate(req.words):
            try:
                phonemes.append(g2p(word).value)
            except FrontendError as exc:
                phonemes.append(None)
                errors.append({"index": i, "word": word, "error": str(exc)})
        return JSONResponse(
            {
                "schema_version": SCHEMA_VERSION,
                "phonemes": phonemes,
                "errors": errors,
            }
        )

    if config.static_dir is not None:
        app.mount("/", StaticFiles(directory=str(config.static_dir), html=True))

    return app
