"""Bookmark-as-archive: submission jobs, archive URLs, and the URL log.

Bookmarking a page with an archive selected creates a folder titled with
the live URL holding the original bookmark plus one archive node per
submission.  For archives that resolve 14-digit datestring URLs, the
archive node is immediately usable: its URL embeds the submission time
plus a fixed offset, which the archive redirects to the nearest memento.
Megalodon offers no such redirect, so its node links to the live page
until the job reports the real memento URL.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, replace
from datetime import datetime, timedelta, timezone
from enum import Enum
from pathlib import Path
from urllib.parse import urljoin, urlsplit

from .archives import (
    ARCHIVE_TODAY,
    INTERNET_ARCHIVE,
    MEGALODON,
    KnownArchive,
    RedirectStyle,
    archive_by_id,
    default_archives,
)
from .bookmarks import BookmarkNode, BookmarkStore, NodeType, save_store
from .datestrings import to_datestring14
from .errors import NoRedirectSupport
from .fetcher import FetchConfig, fetch_resource
from .fixtures import Transport, TransportError

DEFAULT_OFFSET_SECONDS = 30

# Dropdown choice -> submission archive id.
CHOICE_TO_ARCHIVE_ID: dict[NodeType, str] = {
    NodeType.ARCHIVE_TODAY: ARCHIVE_TODAY,
    NodeType.INTERNET_ARCHIVE: INTERNET_ARCHIVE,
    NodeType.MEGALODON: MEGALODON,
}


class JobState(str, Enum):
    PENDING = "PENDING"
    RUNNING = "RUNNING"
    DONE = "DONE"
    FAILED = "FAILED"


@dataclass
class ArchiveJob:
    id: str
    archive_id: str
    target_url: str
    submitted_at: datetime
    status: JobState = JobState.PENDING
    result_url: str | None = None
    error: str | None = None
    # Bookmark node to update once the archive reports the memento URL.
    node_id: int | None = None


def construct_archive_url(
    archive: KnownArchive,
    original_url: str,
    t: datetime,
    offset_seconds: int = 0,
) -> str:
    """Datestring URL the archive will redirect to its nearest memento.

    Raises NoRedirectSupport for archives without nearest-datetime
    resolution (Megalodon).
    """
    if archive.redirect_style is not RedirectStyle.NEAREST_DATETIME:
        raise NoRedirectSupport(f"{archive.id} does not resolve datestring URLs")
    if offset_seconds < 0:
        raise ValueError("offset_seconds must be non-negative")
    datestring = to_datestring14(t + timedelta(seconds=offset_seconds))
    return f"{archive.redirect_base}/{datestring}/{original_url}"


def _require_2xx(record) -> None:
    if record.error is not None:
        raise RuntimeError(record.error)
    if not 200 <= record.status < 300:
        raise RuntimeError(f"HTTP_{record.status}")


def submit_and_resolve(
    transport: Transport,
    archive: KnownArchive,
    url: str,
    cfg: FetchConfig | None = None,
) -> str:
    """Submit ``url`` and return the memento URL the archive reports.

    Raises RuntimeError with a reason on any failure; callers convert that
    into a FAILED job.
    """
    cfg = cfg or FetchConfig()
    if archive.submit_endpoint is None:
        raise RuntimeError(f"{archive.id} accepts no submissions")

    if archive.id == INTERNET_ARCHIVE:
        # Wayback save: GET <endpoint>/<url>; the capture path comes back
        # in Content-Location (or as the final redirect target).
        record = fetch_resource(transport, f"{archive.submit_endpoint}/{url}", cfg)
        _require_2xx(record)
        location = record.header("Content-Location")
        if location:
            return urljoin("https://web.archive.org/", location)
        if record.final_url and record.final_url != record.request_url:
            return record.final_url
        raise RuntimeError("NO_RESULT_URL")

    # Archive.today and Megalodon take a form post and answer with the
    # memento location in Refresh/Location.
    try:
        response = transport.request(
            "POST",
            archive.submit_endpoint,
            timeout=cfg.per_request_timeout,
            data={"url": url},
        )
    except TransportError as exc:
        raise RuntimeError(exc.kind) from exc
    if response.status >= 400:
        raise RuntimeError(f"HTTP_{response.status}")
    refresh = response.header("Refresh")
    if refresh and "url=" in refresh:
        return refresh.split("url=", 1)[1].strip()
    location = response.header("Location")
    if location:
        return urljoin(archive.submit_endpoint, location)
    raise RuntimeError("NO_RESULT_URL")


def append_archive_log(path: str | Path, memento_url: str) -> None:
    """Append one memento URL per line; the log is append-only."""
    with open(path, "a", encoding="utf-8", newline="\n") as log:
        log.write(memento_url + "\n")


@dataclass
class BookmarkMutation:
    """What bookmark_with_archive changed in the store."""

    bookmark: BookmarkNode
    created_bookmark: bool
    folder: BookmarkNode | None = None
    archive_node: BookmarkNode | None = None
    archive: KnownArchive | None = None


def bookmark_with_archive(
    store: BookmarkStore,
    url: str,
    title: str | None = None,
    choice: NodeType = NodeType.NO_ARCHIVE,
    now: datetime | None = None,
    offset_seconds: int = DEFAULT_OFFSET_SECONDS,
    archives: list[KnownArchive] | None = None,
) -> BookmarkMutation:
    """Apply the bookmark-as-archive store mutations (no submission).

    choice=NO_ARCHIVE leaves a plain bookmark.  Otherwise the bookmark is
    wrapped in a folder titled with the live URL (created once, reused on
    repeat archiving) and an archive node is added beside it.
    """
    if choice is not NodeType.NO_ARCHIVE and choice not in CHOICE_TO_ARCHIVE_ID:
        raise ValueError(f"choice must be an archive dropdown option, not {choice.value}")
    now = now or datetime.now(timezone.utc).replace(microsecond=0)
    archives = archives if archives is not None else default_archives()

    bookmark = store.find_url_bookmark(url)
    created = bookmark is None
    if bookmark is None:
        bookmark = store.add_url(
            store.roots[NodeType.BOOKMARK_BAR],
            title=title or url,
            url=url,
            created_at=now,
        )

    if choice is NodeType.NO_ARCHIVE:
        return BookmarkMutation(bookmark=bookmark, created_bookmark=created)

    archive = archive_by_id(archives, CHOICE_TO_ARCHIVE_ID[choice])
    if archive is None:
        raise ValueError(f"no configured archive for {choice.value}")

    parent = store.parent_of(bookmark)
    if parent is not None and parent.node_type is NodeType.FOLDER and parent.title == url:
        folder = parent
    else:
        folder = store.add_folder(parent, title=url, created_at=now)
        store.move(bookmark, folder)

    if archive.redirect_style is RedirectStyle.NEAREST_DATETIME:
        node_url = construct_archive_url(archive, url, now, offset_seconds)
    else:
        node_url = url  # no datestring redirect; point at the live page
    host = urlsplit(url).hostname or url
    archive_node = store.add_url(
        folder,
        title=f"{archive.display_name} {host} {now.strftime('%Y-%m-%d')}",
        url=node_url,
        created_at=now,
    )
    return BookmarkMutation(
        bookmark=bookmark,
        created_bookmark=created,
        folder=folder,
        archive_node=archive_node,
        archive=archive,
    )


class ArchiveClient:
    """Owns the store, the job table, and the archive log.

    Every store mutation happens under one lock (the single-writer rule);
    submissions run on background threads and enqueue their completion
    mutation through the same lock.
    """

    def __init__(
        self,
        store: BookmarkStore,
        transport: Transport,
        *,
        archives: list[KnownArchive] | None = None,
        store_path: str | Path | None = None,
        log_path: str | Path | None = None,
        offset_seconds: int = DEFAULT_OFFSET_SECONDS,
        cfg: FetchConfig | None = None,
        clock=None,
        synchronous: bool = False,
    ):
        self.store = store
        self.transport = transport
        self.archives = archives if archives is not None else default_archives()
        self.store_path = Path(store_path) if store_path else None
        self.log_path = Path(log_path) if log_path else None
        self.offset_seconds = offset_seconds
        self.cfg = cfg or FetchConfig()
        self.clock = clock or (
            lambda: datetime.now(timezone.utc).replace(microsecond=0)
        )
        self.synchronous = synchronous
        self.lock = threading.RLock()
        self._jobs: dict[str, ArchiveJob] = {}
        self._job_seq = itertools.count(1)
        self._threads: list[threading.Thread] = []

    # ------------------------------------------------------------- queries
    def job(self, job_id: str) -> ArchiveJob | None:
        with self.lock:
            job = self._jobs.get(job_id)
            return replace(job) if job else None

    def jobs(self) -> list[ArchiveJob]:
        with self.lock:
            return [replace(job) for job in self._jobs.values()]

    # ----------------------------------------------------------- operations
    def bookmark_with_archive(
        self,
        url: str,
        title: str | None = None,
        choice: NodeType = NodeType.NO_ARCHIVE,
        offset_seconds: int | None = None,
    ) -> tuple[BookmarkMutation, ArchiveJob | None]:
        offset = self.offset_seconds if offset_seconds is None else offset_seconds
        with self.lock:
            mutation = bookmark_with_archive(
                self.store,
                url,
                title=title,
                choice=choice,
                now=self.clock(),
                offset_seconds=offset,
                archives=self.archives,
            )
            self._persist()
            if mutation.archive is None:
                return mutation, None
            job = ArchiveJob(
                id=f"job-{next(self._job_seq)}",
                archive_id=mutation.archive.id,
                target_url=url,
                submitted_at=self.clock(),
                node_id=mutation.archive_node.id,
            )
            self._jobs[job.id] = job

        if self.synchronous:
            self._run_job(job.id)
        else:
            thread = threading.Thread(
                target=self._run_job, args=(job.id,), daemon=True
            )
            self._threads.append(thread)
            thread.start()
        return mutation, self.job(job.id)

    def wait_all(self, timeout: float = 60.0) -> None:
        for thread in self._threads:
            thread.join(timeout)

    # ------------------------------------------------------------ internals
    def _persist(self) -> None:
        if self.store_path is not None:
            save_store(self.store, self.store_path)

    def _run_job(self, job_id: str) -> None:
        with self.lock:
            job = self._jobs[job_id]
            archive = archive_by_id(self.archives, job.archive_id)
            if archive is None:
                job.status = JobState.FAILED
                job.error = "UNKNOWN_ARCHIVE"
                return
            job.status = JobState.RUNNING
            target = job.target_url

        try:
            result_url = submit_and_resolve(self.transport, archive, target, self.cfg)
        except RuntimeError as exc:
            with self.lock:
                job.status = JobState.FAILED
                job.error = str(exc)
            return

        # Completion mutation: log line + bookmark node update, one lock.
        with self.lock:
            job.status = JobState.DONE
            job.result_url = result_url
            if self.log_path is not None:
                append_archive_log(self.log_path, result_url)
            if job.node_id is not None:
                node = self.store.node_by_id(job.node_id)
                if node is not None and node.node_type is NodeType.URL:
                    self.store.set_url(node, result_url)
                    self._persist()
