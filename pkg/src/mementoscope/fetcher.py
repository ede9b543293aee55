"""Resolve a URL into a FrameTree: fetch, follow redirects, extract frames.

Documents are fetched with GET (bodies are needed for frame extraction);
subresources use HEAD with a GET fallback.  Fetch failures never propagate
out of a tree build except for the root document itself.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from html.parser import HTMLParser
from urllib.parse import urljoin, urlsplit

from .datestrings import MementoDatetime, parse_http_date
from .errors import RootFetchFailed, UnparseableDate
from .fixtures import Transport, TransportError
from .frametree import FrameNode, FrameTree
from .headers import detect_memento_header
from .version import USER_AGENT

_REDIRECT_STATUSES = (301, 302, 303, 307, 308)
# Fetch error tags recorded on nodes.
TIMEOUT = "TIMEOUT"
TOO_MANY_REDIRECTS = "TOO_MANY_REDIRECTS"
NETWORK_ERROR = "NETWORK_ERROR"
UNSUPPORTED_SCHEME = "UNSUPPORTED_SCHEME"


@dataclass(frozen=True)
class FetchConfig:
    max_depth: int = 3
    max_frames: int = 64
    redirect_limit: int = 10
    per_request_timeout: float = 20.0
    concurrency_limit: int = 8
    user_agent: str = USER_AGENT
    fetch_subresources: bool = False

    def __post_init__(self):
        for name in (
            "max_depth",
            "max_frames",
            "redirect_limit",
            "per_request_timeout",
            "concurrency_limit",
        ):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive")


@dataclass
class ResourceRecord:
    request_url: str
    final_url: str | None = None
    status: int = 0
    headers: tuple[tuple[str, str], ...] = ()
    body: bytes | None = None
    memento_datetime: MementoDatetime | None = None
    content_type: str | None = None
    elapsed: float = 0.0
    error: str | None = None
    redirects: int = 0

    @property
    def ok(self) -> bool:
        return self.error is None

    @property
    def memento_header(self) -> str | None:
        return detect_memento_header(self.headers)

    def header(self, name: str) -> str | None:
        name = name.lower()
        for key, value in self.headers:
            if key.lower() == name:
                return value
        return None


def fetch_resource(
    transport: Transport,
    url: str,
    cfg: FetchConfig | None = None,
    *,
    method: str = "GET",
    want_body: bool = True,
) -> ResourceRecord:
    """Fetch one resource, following redirects up to cfg.redirect_limit.

    Failures (timeout, network, redirect storm, unsupported scheme) are
    recorded on the returned record, never raised.
    """
    cfg = cfg or FetchConfig()
    started = time.monotonic()

    def failed(error: str, redirects: int = 0) -> ResourceRecord:
        return ResourceRecord(
            request_url=url,
            error=error,
            redirects=redirects,
            elapsed=time.monotonic() - started,
        )

    scheme = urlsplit(url).scheme.lower()
    if scheme not in ("http", "https"):
        return failed(UNSUPPORTED_SCHEME)

    current = url
    current_method = method
    redirects = 0
    while True:
        try:
            response = transport.request(
                current_method, current, timeout=cfg.per_request_timeout
            )
        except TransportError as exc:
            return failed(exc.kind, redirects)

        location = response.header("Location")
        if response.status in _REDIRECT_STATUSES and location:
            redirects += 1
            if redirects > cfg.redirect_limit:
                return failed(TOO_MANY_REDIRECTS, redirects)
            current = urljoin(current, location)
            if response.status == 303:
                current_method = "GET" if current_method != "HEAD" else "HEAD"
            continue

        raw_header = detect_memento_header(response.headers)
        parsed = None
        if raw_header is not None:
            try:
                parsed = parse_http_date(raw_header)
            except UnparseableDate:
                parsed = None
        content_type = response.header("Content-Type")
        if content_type is not None:
            content_type = content_type.split(";", 1)[0].strip().lower()
        return ResourceRecord(
            request_url=url,
            final_url=current,
            status=response.status,
            headers=response.headers,
            body=response.body if want_body else None,
            memento_datetime=parsed,
            content_type=content_type,
            elapsed=time.monotonic() - started,
            redirects=redirects,
        )


class _FrameSrcParser(HTMLParser):
    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.srcs: list[str] = []
        self.base_href: str | None = None

    def handle_starttag(self, tag, attrs):
        if tag == "base" and self.base_href is None:
            for name, value in attrs:
                if name == "href" and value:
                    self.base_href = value
                    break
        elif tag in ("iframe", "frame"):
            for name, value in attrs:
                if name == "src" and value is not None:
                    self.srcs.append(value)
                    break

    # frame/iframe can appear self-closed in fixture HTML.
    handle_startendtag = handle_starttag


def extract_frames(document: bytes | str, base_url: str) -> list[str]:
    """Absolute URLs of every iframe/frame src, in document order.

    The first ``<base href>`` is honored; the only deduplication is
    dropping frames that resolve to the document's own URL.
    """
    if isinstance(document, bytes):
        document = document.decode("utf-8", errors="replace")
    parser = _FrameSrcParser()
    parser.feed(document)
    parser.close()
    effective_base = base_url
    if parser.base_href:
        effective_base = urljoin(base_url, parser.base_href)
    urls = []
    for src in parser.srcs:
        resolved = urljoin(effective_base, src.strip())
        if resolved != base_url:
            urls.append(resolved)
    return urls


def _node_from_record(url: str, depth: int, record: ResourceRecord) -> FrameNode:
    return FrameNode(
        url=url,
        final_url=record.final_url,
        depth=depth,
        status=record.status,
        memento_datetime=record.memento_datetime,
        memento_header=record.memento_header if record.ok else None,
        fetch_error=record.error,
    )


def _is_html(record: ResourceRecord) -> bool:
    # Absent content type is treated as HTML; browsers sniff, we extract.
    return record.content_type is None or "html" in record.content_type


def _expand(
    transport: Transport, url: str, cfg: FetchConfig
) -> tuple[FrameTree, list[tuple[FrameNode, ResourceRecord]]]:
    """Build the tree and keep each attached node's ResourceRecord."""
    root_record = fetch_resource(transport, url, cfg)
    if not root_record.ok:
        raise RootFetchFailed(
            f"could not fetch {url}: {root_record.error}", cause=root_record.error
        )
    root = _node_from_record(url, 0, root_record)
    documents = [(root, root_record)]

    # ancestry[id(node)] = URLs (requested + final) along the path to root,
    # used by the cycle guard.
    ancestry: dict[int, frozenset[str]] = {
        id(root): frozenset(u for u in (url, root_record.final_url) if u)
    }
    budget = cfg.max_frames

    with ThreadPoolExecutor(max_workers=cfg.concurrency_limit) as pool:
        level = [(root, root_record)]
        while level and budget > 0:
            tasks: list[tuple[FrameNode, str]] = []
            for node, record in level:
                if node.depth >= cfg.max_depth:
                    continue
                if record.body is None or not _is_html(record):
                    continue
                base = record.final_url or node.url
                for child_url in extract_frames(record.body, base):
                    if child_url in ancestry[id(node)]:
                        continue
                    if budget <= 0:
                        break
                    budget -= 1
                    tasks.append((node, child_url))

            if not tasks:
                break
            records = list(
                pool.map(lambda t: fetch_resource(transport, t[1], cfg), tasks)
            )

            next_level = []
            for (parent, child_url), record in zip(tasks, records):
                if record.final_url and record.final_url in ancestry[id(parent)]:
                    continue  # redirect led back into an ancestor
                child = _node_from_record(child_url, parent.depth + 1, record)
                parent.children.append(child)
                ancestry[id(child)] = ancestry[id(parent)] | frozenset(
                    u for u in (child_url, record.final_url) if u
                )
                if record.ok:
                    documents.append((child, record))
                    next_level.append((child, record))
            level = next_level

    return FrameTree(root=root, requested_url=url), documents


def build_frame_tree(transport: Transport, url: str, cfg: FetchConfig | None = None) -> FrameTree:
    """Breadth-first frame expansion bounded by max_depth and max_frames.

    Raises RootFetchFailed when the root document cannot be fetched; every
    other failure is recorded on its node.
    """
    tree, _ = _expand(transport, url, cfg or FetchConfig())
    return tree


class _SubresourceParser(HTMLParser):
    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.targets: list[str] = []
        self.base_href: str | None = None

    def handle_starttag(self, tag, attrs):
        pairs = dict(attrs)
        if tag == "base" and self.base_href is None and pairs.get("href"):
            self.base_href = pairs["href"]
        elif tag in ("img", "script") and pairs.get("src"):
            self.targets.append(pairs["src"])
        elif tag == "link" and pairs.get("href"):
            rel = (pairs.get("rel") or "").lower().split()
            if "stylesheet" in rel:
                self.targets.append(pairs["href"])

    handle_startendtag = handle_starttag


def extract_subresources(document: bytes | str, base_url: str) -> list[str]:
    """img/script/stylesheet targets, document order, first occurrence only."""
    if isinstance(document, bytes):
        document = document.decode("utf-8", errors="replace")
    parser = _SubresourceParser()
    parser.feed(document)
    parser.close()
    effective_base = base_url
    if parser.base_href:
        effective_base = urljoin(base_url, parser.base_href)
    seen = set()
    urls = []
    for target in parser.targets:
        resolved = urljoin(effective_base, target.strip())
        if resolved not in seen:
            seen.add(resolved)
            urls.append(resolved)
    return urls


@dataclass(frozen=True)
class SubresourceReport:
    """Datetimes of archived subresources across a whole frame tree."""

    entries: tuple[tuple[str, MementoDatetime], ...] = ()
    checked: int = 0
    failed: int = 0


def _probe_subresource(
    transport: Transport, url: str, cfg: FetchConfig
) -> ResourceRecord:
    record = fetch_resource(transport, url, cfg, method="HEAD", want_body=False)
    if not record.ok or record.status in (405, 501):
        record = fetch_resource(transport, url, cfg, want_body=False)
    return record


def collect_resource_datetimes(
    transport: Transport,
    url: str,
    cfg: FetchConfig | None = None,
    *,
    tree_documents: list[tuple[FrameNode, ResourceRecord]] | None = None,
) -> SubresourceReport:
    """Memento datetimes of img/script/stylesheet targets in every document.

    HEAD first, GET on methods the server rejects; per-resource failures
    are skipped and counted.  ``tree_documents`` reuses an existing
    expansion instead of refetching the tree.
    """
    cfg = cfg or FetchConfig()
    if tree_documents is None:
        _, tree_documents = _expand(transport, url, cfg)

    targets: list[str] = []
    seen: set[str] = set()
    for node, record in tree_documents:
        if record.body is None or not _is_html(record):
            continue
        base = record.final_url or node.url
        for target in extract_subresources(record.body, base):
            if target not in seen:
                seen.add(target)
                targets.append(target)

    entries = []
    checked = 0
    failed = 0
    with ThreadPoolExecutor(max_workers=cfg.concurrency_limit) as pool:
        records = list(pool.map(lambda u: _probe_subresource(transport, u, cfg), targets))
    for target, record in zip(targets, records):
        if not record.ok:
            failed += 1
            continue
        checked += 1
        if record.memento_datetime is not None:
            entries.append((target, record.memento_datetime))
    return SubresourceReport(entries=tuple(entries), checked=checked, failed=failed)
