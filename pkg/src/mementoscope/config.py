"""Application configuration: one JSON document, env overrides on top.

Precedence per setting: environment variable, then config file, then the
built-in default.  Only the listen address and the store path have env
overrides (MEMENTOSCOPE_LISTEN, MEMENTOSCOPE_STORE); the config file is
located through MEMENTOSCOPE_CONFIG or a ``mementoscope.json`` in the
working directory.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .archives import (
    ARCHIVE_TODAY,
    INTERNET_ARCHIVE,
    MEGALODON,
    KnownArchive,
    RedirectStyle,
    archive_by_id,
    default_archives,
)
from .fetcher import FetchConfig

ENV_CONFIG = "MEMENTOSCOPE_CONFIG"
ENV_LISTEN = "MEMENTOSCOPE_LISTEN"
ENV_STORE = "MEMENTOSCOPE_STORE"
# Directory of recorded exchanges to replay instead of live HTTP.
ENV_FIXTURES = "MEMENTOSCOPE_FIXTURES"

DEFAULT_CONFIG_FILE = "mementoscope.json"
DEFAULT_LISTEN = "127.0.0.1:8670"


@dataclass
class AppConfig:
    known_archives: list[KnownArchive] = field(default_factory=default_archives)
    fetch: FetchConfig = field(default_factory=FetchConfig)
    store_path: Path = Path("bookmarks.json")
    log_path: Path = Path("archive_urls.txt")
    listen_address: str = DEFAULT_LISTEN
    default_offset_seconds: int = 30

    def __post_init__(self):
        for submitter in (INTERNET_ARCHIVE, ARCHIVE_TODAY, MEGALODON):
            archive = archive_by_id(self.known_archives, submitter)
            if archive is None or archive.submit_endpoint is None:
                raise ValueError(f"known_archives must include submission archive {submitter!r}")
        if not any(a.iframe_display for a in self.known_archives):
            raise ValueError("known_archives must include the iframe-display archives")
        if self.default_offset_seconds < 0:
            raise ValueError("default_offset_seconds must be non-negative")


def _archive_from_json(data: dict) -> KnownArchive:
    return KnownArchive(
        id=data["id"],
        display_name=data["display_name"],
        host_patterns=tuple(data["host_patterns"]),
        iframe_display=bool(data.get("iframe_display", False)),
        redirect_style=RedirectStyle(data.get("redirect_style", "NONE")),
        redirect_base=data.get("redirect_base"),
        submit_endpoint=data.get("submit_endpoint"),
    )


_TOP_LEVEL_KEYS = {
    "known_archives",
    "fetch",
    "store_path",
    "log_path",
    "listen_address",
    "default_offset_seconds",
}


def load_config(
    path: str | Path | None = None,
    env: Mapping[str, str] | None = None,
) -> AppConfig:
    """Assemble the effective configuration.

    Raises ValueError on an unreadable document, unknown keys, or a
    config violating the archive-list invariant.
    """
    env = os.environ if env is None else env

    if path is None:
        path = env.get(ENV_CONFIG)
    if path is None and Path(DEFAULT_CONFIG_FILE).exists():
        path = DEFAULT_CONFIG_FILE

    document: dict = {}
    if path is not None:
        try:
            document = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ValueError(f"cannot read config {path}: {exc}") from exc
        if not isinstance(document, dict):
            raise ValueError(f"config {path} must be a JSON object")
        unknown = set(document) - _TOP_LEVEL_KEYS
        if unknown:
            raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")

    try:
        fetch = FetchConfig(**document.get("fetch", {}))
        archives = (
            [_archive_from_json(a) for a in document["known_archives"]]
            if "known_archives" in document
            else default_archives()
        )
        config = AppConfig(
            known_archives=archives,
            fetch=fetch,
            store_path=Path(env.get(ENV_STORE) or document.get("store_path", "bookmarks.json")),
            log_path=Path(document.get("log_path", "archive_urls.txt")),
            listen_address=env.get(ENV_LISTEN)
            or document.get("listen_address", DEFAULT_LISTEN),
            default_offset_seconds=int(document.get("default_offset_seconds", 30)),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad config: {exc}") from exc
    return config


def make_transport(config: AppConfig, env: Mapping[str, str] | None = None):
    """Live transport, or fixture replay when MEMENTOSCOPE_FIXTURES is set."""
    env = os.environ if env is None else env
    fixtures = env.get(ENV_FIXTURES)
    if fixtures:
        from .fixtures import FixtureTransport

        return FixtureTransport(fixtures)
    from .fixtures import RequestsTransport

    return RequestsTransport(user_agent=config.fetch.user_agent)
