"""Command-line front door: analyze, bookmark, timemap-eval, serve."""

from __future__ import annotations

import json
import sys
from dataclasses import replace
from datetime import datetime, timedelta, timezone
from pathlib import Path

import click

from .archiving import ArchiveClient, JobState
from .bookmarks import NodeType, load_store
from .config import load_config, make_transport
from .datestrings import from_datestring14
from .errors import MementoscopeError, RootFetchFailed
from .fetcher import fetch_resource
from .reports import analyze as run_analysis
from .service import ARCHIVE_CHOICES, create_app
from .timemaps import offset_match_rate, parse_timemap


@click.group()
def main():
    """Memento-aware page analysis, bookmark archiving, and offset evaluation."""


@main.command()
@click.argument("url")
@click.option("--max-depth", type=int, default=None, help="Frame recursion depth cap.")
@click.option("--resources", is_flag=True, help="Probe subresources for memento datetimes.")
@click.option("--json", "as_json", is_flag=True, help="Print the full report as JSON.")
def analyze(url, max_depth, resources, as_json):
    """Fetch URL, classify its frame tree, and print the verdict."""
    config = load_config()
    transport = make_transport(config)
    cfg = config.fetch
    if max_depth is not None:
        if max_depth < 1:
            raise click.UsageError("--max-depth must be positive")
        cfg = replace(cfg, max_depth=max_depth)
    try:
        report = run_analysis(
            transport, url, cfg, resources=resources, archives=config.known_archives
        )
    except RootFetchFailed as exc:
        click.echo(f"error: {exc.message}", err=True)
        sys.exit(1)

    if as_json:
        click.echo(report.to_json(), nl=False)
        return
    click.echo(f"url: {url}")
    click.echo(f"kind: {report.classification.kind.value}")
    if report.badge is not None:
        click.echo(f"badge: {report.badge}")
    for line in report.popup:
        click.echo(line)
    if report.resource_datetimes is not None:
        click.echo(f"archived resources: {len(report.resource_datetimes)}")
        for target, dt in report.resource_datetimes:
            click.echo(f"  {target} {dt.raw}")


@main.command()
@click.argument("url")
@click.option(
    "--archive",
    type=click.Choice(sorted(ARCHIVE_CHOICES)),
    default="none",
    show_default=True,
    help="Archive to submit the page to.",
)
@click.option("--title", default=None, help="Bookmark title (defaults to the URL).")
@click.option("--offset", type=int, default=None, help="Datestring offset in seconds.")
@click.option("--wait", is_flag=True, help="Block until the archive job completes.")
def bookmark(url, archive, title, offset, wait):
    """Bookmark URL, optionally submitting it to a web archive."""
    config = load_config()
    transport = make_transport(config)
    try:
        store = load_store(config.store_path)
        client = ArchiveClient(
            store,
            transport,
            archives=config.known_archives,
            store_path=config.store_path,
            log_path=config.log_path,
            offset_seconds=config.default_offset_seconds,
            cfg=config.fetch,
            synchronous=wait,
        )
        mutation, job = client.bookmark_with_archive(
            url, title=title, choice=ARCHIVE_CHOICES[archive], offset_seconds=offset
        )
    except MementoscopeError as exc:
        click.echo(f"error: {exc.code}: {exc.message}", err=True)
        sys.exit(1)

    click.echo(f"bookmark node: {mutation.bookmark.id} {mutation.bookmark.url}")
    if mutation.folder is not None:
        click.echo(f"folder node: {mutation.folder.id} {mutation.folder.title}")
    if mutation.archive_node is not None:
        click.echo(f"archive node: {mutation.archive_node.id} {mutation.archive_node.url}")
    if job is not None:
        job = client.job(job.id)
        line = f"job: {job.id} {job.status.value}"
        if job.status is JobState.DONE:
            line += f" {job.result_url}"
        elif job.status is JobState.FAILED:
            line += f" {job.error}"
        click.echo(line)


def _parse_instant(text: str) -> datetime:
    text = text.strip()
    if len(text) == 14 and text.isdigit():
        return from_datestring14(text).instant
    for pattern in ("%Y-%m-%dT%H:%M:%SZ", "%Y-%m-%d"):
        try:
            return datetime.strptime(text, pattern).replace(tzinfo=timezone.utc)
        except ValueError:
            continue
    raise click.UsageError(f"cannot parse instant {text!r}")


@main.command(name="timemap-eval")
@click.argument("source")
@click.option("--offsets", default="30,60,120", show_default=True, help="Offsets in seconds, comma-separated.")
@click.option("--range", "sample_range", default=None, help="Sample range A..B (ISO instant, date, or 14-digit datestring).")
@click.option("--step", type=int, default=1, show_default=True, help="Sample stride in seconds.")
def timemap_eval(source, offsets, sample_range, step):
    """Evaluate offset match rates over a TimeMap file or URL."""
    config = load_config()
    try:
        offset_list = [int(part) for part in offsets.split(",") if part.strip()]
    except ValueError:
        raise click.UsageError(f"bad --offsets value {offsets!r}")
    if not offset_list:
        raise click.UsageError("--offsets needs at least one value")
    if step < 1:
        raise click.UsageError("--step must be at least 1")

    if source.startswith(("http://", "https://")):
        record = fetch_resource(make_transport(config), source, config.fetch)
        if not record.ok or record.body is None:
            click.echo(f"error: could not fetch {source}: {record.error}", err=True)
            sys.exit(1)
        body = record.body.decode("utf-8", "replace")
    else:
        path = Path(source)
        if not path.exists():
            raise click.UsageError(f"no such file: {source}")
        body = path.read_text(encoding="utf-8")

    try:
        timemap = parse_timemap(body)
        if sample_range is not None:
            start_text, sep, end_text = sample_range.partition("..")
            if not sep:
                raise click.UsageError("--range must look like A..B")
            start, end = _parse_instant(start_text), _parse_instant(end_text)
        else:
            start = timemap.entries[0].datetime.instant
            end = timemap.entries[-1].datetime.instant
        if start >= end:
            end = start + timedelta(seconds=1)
        results = [
            offset_match_rate(timemap, start, end, step, offset)
            for offset in offset_list
        ]
    except MementoscopeError as exc:
        click.echo(f"error: {exc.code}: {exc.message}", err=True)
        sys.exit(1)

    click.echo(f"{'offset':>8}  {'samples':>8}  {'matches':>8}  {'rate':>8}")
    for result in results:
        click.echo(
            f"{result.offset_seconds:>8}  {result.samples:>8}  "
            f"{result.matches:>8}  {result.match_rate:>8.4f}"
        )
    click.echo(
        json.dumps(
            {
                "original_uri": timemap.original_uri,
                "range": [
                    start.strftime("%Y-%m-%dT%H:%M:%SZ"),
                    end.strftime("%Y-%m-%dT%H:%M:%SZ"),
                ],
                "step_seconds": step,
                "results": [
                    {
                        "offset_seconds": r.offset_seconds,
                        "samples": r.samples,
                        "matches": r.matches,
                        "match_rate": r.match_rate,
                    }
                    for r in results
                ],
            },
            indent=2,
        )
    )


@main.command()
@click.option("--listen", default=None, help="host:port to bind (overrides config).")
def serve(listen):
    """Serve the REST API (and the dashboard, when built)."""
    import uvicorn

    config = load_config()
    if listen is not None:
        config.listen_address = listen
    host, _, port_text = config.listen_address.rpartition(":")
    if not host or not port_text.isdigit():
        raise click.UsageError(f"bad listen address {config.listen_address!r}")
    app = create_app(config)
    uvicorn.run(app, host=host, port=int(port_text))


if __name__ == "__main__":
    main()
