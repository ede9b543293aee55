"""Analysis reports: stable JSON snapshots of one page analysis.

A report aggregates the frame tree, its classification, and the derived
badge/popup strings.  Serialization is byte-stable for a given input so
reports can be golden-tested and content-addressed: the id is a digest of
the serialized payload.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from datetime import datetime, timezone

from .archives import KnownArchive, default_archives
from .classify import PageClassification, classify_tree
from .datestrings import MementoDatetime, parse_http_date, to_datestring14
from .errors import UnparseableDate
from .fetcher import FetchConfig, _expand, collect_resource_datetimes
from .fixtures import Transport
from .frametree import FrameNode, FrameTree
from .messages import badge_text, popup_lines

_EPOCH = datetime(1970, 1, 1, tzinfo=timezone.utc)


def _datetime_json(dt: MementoDatetime | None) -> dict | None:
    if dt is None:
        return None
    return {"raw": dt.raw, "iso": dt.isoformat(), "datestring": to_datestring14(dt)}


def _node_json(node: FrameNode) -> dict:
    return {
        "url": node.url,
        "final_url": node.final_url,
        "depth": node.depth,
        "status": node.status,
        "memento_datetime": _datetime_json(node.memento_datetime),
        "memento_header": node.memento_header,
        "fetch_error": node.fetch_error,
        "children": [_node_json(child) for child in node.children],
    }


def _classification_json(classification: PageClassification) -> dict:
    state = classification.state
    return {
        "kind": classification.kind.value,
        "memento_info": state.memento_info,
        "memento_datetime": _datetime_json(state.memento_datetime),
        "memento_dates": [_datetime_json(dt) for dt in state.memento_dates],
        "mixed_memento_live_web": state.mixed_memento_live_web,
        "deep_dates": [
            {"url": url, "datetime": _datetime_json(dt)}
            for url, dt in classification.deep_dates
        ],
        "unparsed_headers": [
            {"url": url, "header": header}
            for url, header in classification.unparsed_headers
        ],
    }


@dataclass(frozen=True)
class AnalysisReport:
    id: str
    url: str
    fetched_at: datetime
    classification: PageClassification
    badge: str | None
    popup: tuple[str, ...]
    tree: FrameTree
    resource_datetimes: tuple[tuple[str, MementoDatetime], ...] | None = None

    def as_dict(self) -> dict:
        payload = _report_payload(
            self.url, self.fetched_at, self.classification, self.badge,
            self.popup, self.tree, self.resource_datetimes,
        )
        return {"id": self.id, **payload}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"


def _report_payload(url, fetched_at, classification, badge, popup, tree,
                    resource_datetimes) -> dict:
    return {
        "url": url,
        "fetched_at": fetched_at.strftime("%Y-%m-%dT%H:%M:%SZ"),
        "classification": _classification_json(classification),
        "badge": badge,
        "popup": list(popup),
        "tree": _node_json(tree.root),
        "resource_datetimes": None
        if resource_datetimes is None
        else [
            {"url": target, "datetime": _datetime_json(dt)}
            for target, dt in resource_datetimes
        ],
    }


def _report_id(payload: dict) -> str:
    digest = hashlib.sha256(
        json.dumps(payload, sort_keys=True).encode("utf-8")
    ).hexdigest()
    return digest[:16]


def analyze(
    transport: Transport,
    url: str,
    cfg: FetchConfig | None = None,
    *,
    resources: bool = False,
    archives: list[KnownArchive] | None = None,
) -> AnalysisReport:
    """Fetch, classify, and package one page analysis.

    Raises RootFetchFailed when the root document cannot be fetched.
    """
    cfg = cfg or FetchConfig()
    archives = archives if archives is not None else default_archives()
    tree, documents = _expand(transport, url, cfg)
    classification = classify_tree(tree, archives)

    # fetched_at comes from the server's own clock so identical fixture
    # responses always produce identical reports.
    fetched_at = _EPOCH
    date_header = documents[0][1].header("Date")
    if date_header:
        try:
            fetched_at = parse_http_date(date_header).instant
        except UnparseableDate:
            pass

    resource_datetimes = None
    if resources or cfg.fetch_subresources:
        resource_datetimes = collect_resource_datetimes(
            transport, url, cfg, tree_documents=documents
        ).entries

    badge = badge_text(classification)
    popup = tuple(popup_lines(classification))
    payload = _report_payload(
        url, fetched_at, classification, badge, popup, tree, resource_datetimes
    )
    return AnalysisReport(
        id=_report_id(payload),
        url=url,
        fetched_at=fetched_at,
        classification=classification,
        badge=badge,
        popup=popup,
        tree=tree,
        resource_datetimes=resource_datetimes,
    )
