"""Shared test helpers: tree builders, random tree generation, and naive
reference implementations used as oracles."""

from __future__ import annotations

import itertools
import random
from datetime import datetime, timedelta, timezone
from urllib.parse import urlsplit

from mementoscope.classify import MementoState, PageClassification, PageKind
from mementoscope.datestrings import MementoDatetime, from_datestring14
from mementoscope.frametree import FrameNode, FrameTree


def frame(
    url: str,
    *children: FrameNode,
    dt: MementoDatetime | str | None = None,
    header: str | None = None,
    status: int = 200,
    error: str | None = None,
) -> FrameNode:
    """Build a FrameNode; ``dt`` may be a 14-digit datestring for brevity.

    ``header`` set without ``dt`` models an unparseable Memento-Datetime.
    """
    if isinstance(dt, str):
        dt = from_datestring14(dt)
    if header is None and dt is not None:
        header = dt.raw
    return FrameNode(
        url=url,
        final_url=None if error else url,
        status=0 if error else status,
        memento_datetime=dt,
        memento_header=header,
        fetch_error=error,
        children=list(children),
    )


def _assign_depths(node: FrameNode, depth: int) -> None:
    node.depth = depth
    for child in node.children:
        _assign_depths(child, depth + 1)


def tree(root: FrameNode) -> FrameTree:
    _assign_depths(root, 0)
    return FrameTree(root=root, requested_url=root.url)


_HOST_POOL = [
    "example.com",
    "news.example.org",
    "cdn.example.net",
    "web.archive.org",
    "webarchive.nla.gov.au",
    "perma.cc",
    "archive.ph",
]

_counter = itertools.count()


def random_mdt(rng: random.Random) -> MementoDatetime:
    instant = datetime(2000, 1, 1, tzinfo=timezone.utc) + timedelta(
        seconds=rng.randrange(0, 20 * 365 * 86400)
    )
    return MementoDatetime(instant=instant, raw=instant.strftime("%Y%m%d%H%M%S"))


def random_tree(
    rng: random.Random, max_depth: int = 5, max_fanout: int = 4
) -> FrameTree:
    """A random well-formed frame tree with varied archival signals."""

    def gen(depth: int) -> FrameNode:
        url = f"https://{rng.choice(_HOST_POOL)}/page{next(_counter)}"
        roll = rng.random()
        dt = header = None
        if roll < 0.40:
            dt = random_mdt(rng)
            header = dt.raw
        elif roll < 0.50:
            header = "not a real datetime"
        error = None
        status = 200
        fate = rng.random()
        if fate < 0.08:
            error = rng.choice(["TIMEOUT", "NETWORK_ERROR"])
            status = 0
            dt = header = None
        elif fate < 0.16:
            status = rng.choice([404, 500, 301])
        children = []
        if depth < max_depth:
            for _ in range(rng.randrange(0, max_fanout + 1)):
                if rng.random() < 0.55:
                    children.append(gen(depth + 1))
        return FrameNode(
            url=url,
            final_url=None if error else url,
            status=status,
            memento_datetime=dt,
            memento_header=header,
            fetch_error=error,
            children=children,
        )

    return tree(gen(0))


def classify_naive(page_tree: FrameTree, archives) -> PageClassification:
    """Independent rule-by-rule scan used to cross-check classify_tree.

    Deliberately dumb: explicit BFS node collection, per-rule passes,
    no shared code with the implementation beyond the data types.
    """
    root = page_tree.root
    nodes: list[FrameNode] = []
    queue = [root]
    while queue:
        node = queue.pop(0)
        nodes.append(node)
        queue.extend(node.children)

    def claims(n: FrameNode) -> bool:
        return n.memento_header is not None or n.memento_datetime is not None

    def fetched_ok(n: FrameNode) -> bool:
        return n.fetch_error is None and 200 <= n.status < 300

    zombie = False
    for node in nodes:
        if claims(node):
            for child in node.children:
                if not claims(child) and fetched_ok(child):
                    zombie = True

    dates = tuple(
        c.memento_datetime for c in root.children if c.memento_datetime is not None
    )

    promoted_dt = None
    if root.memento_datetime is None:
        dated = [c for c in root.children if c.memento_datetime is not None]
        if len(dated) == 1:
            host = urlsplit(dated[0].final_url or dated[0].url).hostname or ""
            host = host.lower()
            for archive in archives:
                if not archive.iframe_display:
                    continue
                if any(
                    host == p.lower() or host.endswith("." + p.lower())
                    for p in archive.host_patterns
                ):
                    promoted_dt = dated[0].memento_datetime
                    break

    def deep(node: FrameNode, depth: int, out: list) -> None:
        if depth >= 2 and node.memento_datetime is not None:
            out.append((node.final_url or node.url, node.memento_datetime))
        for child in node.children:
            deep(child, depth + 1, out)

    deep_dates: list = []
    deep(root, 0, deep_dates)

    def unparsed(node: FrameNode, out: list) -> None:
        if node.memento_header is not None and node.memento_datetime is None:
            out.append((node.final_url or node.url, node.memento_header))
        for child in node.children:
            unparsed(child, out)

    unparsed_headers: list = []
    unparsed(root, unparsed_headers)

    page_dt = root.memento_datetime if root.memento_datetime is not None else promoted_dt

    if zombie:
        kind = PageKind.ZOMBIE_MEMENTO
        state = MementoState(True, page_dt, dates, True)
    elif root.memento_datetime is not None:
        kind = PageKind.ROOT_MEMENTO
        state = MementoState(True, root.memento_datetime, dates, False)
    elif promoted_dt is not None:
        kind = PageKind.PROMOTED_IFRAME_MEMENTO
        state = MementoState(True, promoted_dt, dates, False)
    elif dates:
        kind = PageKind.MIXED_LIVE_ARCHIVAL
        state = MementoState(True, None, dates, False)
    else:
        kind = PageKind.LIVE
        state = MementoState(False, None, (), False)

    return PageClassification(
        kind=kind,
        state=state,
        deep_dates=tuple(deep_dates),
        unparsed_headers=tuple(unparsed_headers),
    )


def closest_linear(entries, t: datetime):
    """Linear-scan closest-memento oracle; strict < keeps earliest on ties."""
    best = None
    best_distance = None
    for entry in entries:
        distance = abs((entry.datetime.instant - t).total_seconds())
        if best is None or distance < best_distance:
            best, best_distance = entry, distance
    return best
