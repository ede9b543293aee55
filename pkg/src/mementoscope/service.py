"""Local REST service: analysis, bookmarks, archive jobs, configuration.

All error responses use one envelope: {"error": {"code", "message"}} with
400 for malformed requests, 404 for unknown ids, and 502 when the root
fetch fails upstream.  Analysis history is an in-memory ring of the last
100 reports; bookmarks and the archive log are the only persistence.
"""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import replace
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .archiving import ArchiveClient, ArchiveJob
from .bookmarks import NodeType, load_store, store_document
from .config import AppConfig, make_transport
from .errors import MementoscopeError, RootFetchFailed
from .fixtures import Transport
from .reports import analyze

HISTORY_LIMIT = 100

ARCHIVE_CHOICES = {
    "none": NodeType.NO_ARCHIVE,
    "internet_archive": NodeType.INTERNET_ARCHIVE,
    "archive_today": NodeType.ARCHIVE_TODAY,
    "megalodon": NodeType.MEGALODON,
}


class AnalyzeRequest(BaseModel):
    url: str
    max_depth: int | None = None
    resources: bool = False


class BookmarkRequest(BaseModel):
    url: str
    title: str | None = None
    archive: str
    offset_seconds: int | None = None


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status, content={"error": {"code": code, "message": message}}
    )


def _job_json(job: ArchiveJob) -> dict:
    return {
        "id": job.id,
        "archive_id": job.archive_id,
        "target_url": job.target_url,
        "submitted_at": job.submitted_at.strftime("%Y-%m-%dT%H:%M:%SZ"),
        "status": job.status.value,
        "result_url": job.result_url,
        "error": job.error,
        "node_id": job.node_id,
    }


def _node_brief(node) -> dict | None:
    if node is None:
        return None
    return {"id": node.id, "type": node.node_type.value, "title": node.title, "url": node.url}


def create_app(
    config: AppConfig | None = None, transport: Transport | None = None
) -> FastAPI:
    config = config or AppConfig()
    transport = transport or make_transport(config)
    store = load_store(config.store_path)
    client = ArchiveClient(
        store,
        transport,
        archives=config.known_archives,
        store_path=config.store_path,
        log_path=config.log_path,
        offset_seconds=config.default_offset_seconds,
        cfg=config.fetch,
    )
    history: OrderedDict[str, dict] = OrderedDict()

    app = FastAPI(title="mementoscope", docs_url=None, redoc_url=None)
    app.state.client = client
    app.state.config = config

    @app.exception_handler(RequestValidationError)
    async def malformed(request: Request, exc: RequestValidationError):
        return _error(400, "MALFORMED_REQUEST", "invalid request body")

    @app.exception_handler(MementoscopeError)
    async def domain_error(request: Request, exc: MementoscopeError):
        status = 502 if isinstance(exc, RootFetchFailed) else 400
        return _error(status, exc.code, exc.message)

    @app.post("/api/analyze")
    def post_analyze(body: AnalyzeRequest):
        cfg = config.fetch
        if body.max_depth is not None:
            if body.max_depth < 1:
                return _error(400, "MALFORMED_REQUEST", "max_depth must be positive")
            cfg = replace(cfg, max_depth=body.max_depth)
        report = analyze(
            transport,
            body.url,
            cfg,
            resources=body.resources,
            archives=config.known_archives,
        )
        document = report.as_dict()
        history[report.id] = document
        history.move_to_end(report.id)
        while len(history) > HISTORY_LIMIT:
            history.popitem(last=False)
        return document

    @app.get("/api/analyses")
    def get_analyses():
        return {"analyses": list(reversed(history.values()))}

    @app.get("/api/analyses/{report_id}")
    def get_analysis(report_id: str):
        if report_id not in history:
            return _error(404, "UNKNOWN_ID", f"no analysis {report_id!r}")
        return history[report_id]

    @app.get("/api/bookmarks")
    def get_bookmarks():
        with client.lock:
            return store_document(client.store)

    @app.post("/api/bookmarks")
    def post_bookmark(body: BookmarkRequest):
        choice = ARCHIVE_CHOICES.get(body.archive)
        if choice is None:
            return _error(400, "MALFORMED_REQUEST", f"unknown archive {body.archive!r}")
        mutation, job = client.bookmark_with_archive(
            body.url,
            title=body.title,
            choice=choice,
            offset_seconds=body.offset_seconds,
        )
        return {
            "bookmark": _node_brief(mutation.bookmark),
            "created_bookmark": mutation.created_bookmark,
            "folder": _node_brief(mutation.folder),
            "archive_node": _node_brief(mutation.archive_node),
            "job_id": job.id if job else None,
        }

    @app.get("/api/jobs")
    def get_jobs():
        return {"jobs": [_job_json(job) for job in client.jobs()]}

    @app.get("/api/jobs/{job_id}")
    def get_job(job_id: str):
        job = client.job(job_id)
        if job is None:
            return _error(404, "UNKNOWN_ID", f"no job {job_id!r}")
        return _job_json(job)

    @app.get("/api/config/archives")
    def get_archives():
        return {
            "archives": [
                {
                    "id": a.id,
                    "display_name": a.display_name,
                    "host_patterns": list(a.host_patterns),
                    "iframe_display": a.iframe_display,
                    "redirect_style": a.redirect_style.value,
                    "redirect_base": a.redirect_base,
                    "submit_endpoint": a.submit_endpoint,
                }
                for a in config.known_archives
            ]
        }

    dist = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    if dist.is_dir():
        app.mount("/", StaticFiles(directory=dist, html=True), name="dashboard")
    return app
