"""HTTP transports: recorded-fixture replay and the live requests backend.

All fetching goes through the small Transport protocol so every test can
run against recorded exchanges; live network use is an explicit opt-in.

Fixture file format (one file per exchange, UTF-8 headers, raw body):

    GET https://web.archive.org/web/20100412125057/http://www.mitre.org/
    HTTP/1.1 200 OK
    Memento-Datetime: Mon, 12 Apr 2010 12:50:57 GMT
    Content-Type: text/html

    <html>...</html>

Line 1 is ``[METHOD] URL``; a bare URL answers any method.  Line 2 is the
status line, or ``ERROR TIMEOUT`` / ``ERROR NETWORK_ERROR`` to script a
transport failure.  Headers follow verbatim until a blank line; everything
after it is the body, byte for byte.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol

from .version import USER_AGENT

_ERROR_KINDS = ("TIMEOUT", "NETWORK_ERROR")
_METHODS = ("GET", "HEAD", "POST", "PUT", "DELETE", "OPTIONS", "PATCH")


class TransportError(Exception):
    """A request that produced no HTTP response at all."""

    def __init__(self, kind: str, message: str = ""):
        super().__init__(message or kind)
        self.kind = kind


@dataclass(frozen=True)
class TransportResponse:
    url: str
    status: int
    headers: tuple[tuple[str, str], ...]
    body: bytes = b""

    def header(self, name: str) -> str | None:
        """First header value matching ``name``, case-insensitively."""
        name = name.lower()
        for key, value in self.headers:
            if key.lower() == name:
                return value
        return None


class Transport(Protocol):
    def request(
        self,
        method: str,
        url: str,
        *,
        timeout: float | None = None,
        data: dict[str, str] | None = None,
    ) -> TransportResponse: ...


@dataclass(frozen=True)
class Exchange:
    """One recorded request/response pair."""

    url: str
    method: str | None  # None answers any method
    status: int = 0
    reason: str = ""
    headers: tuple[tuple[str, str], ...] = ()
    body: bytes = b""
    error: str | None = None  # scripted transport failure kind
    source: str = ""  # fixture file, for diagnostics


def parse_exchange(raw: bytes, source: str = "") -> Exchange:
    head, _, body = raw.partition(b"\n\n")
    lines = head.decode("utf-8").split("\n")
    if len(lines) < 2:
        raise ValueError(f"{source}: need a request line and a status line")

    request_line = lines[0].strip()
    first, _, rest = request_line.partition(" ")
    if first.upper() in _METHODS:
        method: str | None = first.upper()
        url = rest.strip()
    else:
        method = None
        url = request_line
    if not url:
        raise ValueError(f"{source}: empty request URL")

    status_line = lines[1].strip()
    if status_line.startswith("ERROR"):
        kind = status_line.split(None, 1)[1].strip() if " " in status_line else ""
        if kind not in _ERROR_KINDS:
            raise ValueError(f"{source}: unknown scripted error {kind!r}")
        return Exchange(url=url, method=method, error=kind, source=source)

    parts = status_line.split(None, 2)
    if len(parts) < 2 or not parts[0].startswith("HTTP/"):
        raise ValueError(f"{source}: bad status line {status_line!r}")
    status = int(parts[1])
    reason = parts[2] if len(parts) == 3 else ""

    headers = []
    for line in lines[2:]:
        if not line.strip():
            continue
        name, sep, value = line.partition(":")
        if not sep:
            raise ValueError(f"{source}: bad header line {line!r}")
        headers.append((name.strip(), value.strip()))

    return Exchange(
        url=url,
        method=method,
        status=status,
        reason=reason,
        headers=tuple(headers),
        body=body,
        source=source,
    )


def load_exchanges(directory: str | Path) -> list[Exchange]:
    directory = Path(directory)
    exchanges = []
    for path in sorted(directory.rglob("*.http")):
        exchanges.append(parse_exchange(path.read_bytes(), source=str(path)))
    return exchanges


class FixtureTransport:
    """Replays recorded exchanges; anything unrecorded is a network error.

    A method-specific exchange wins over a bare-URL one.  Requesting a URL
    that is recorded only under other methods yields a synthetic 405,
    which lets fixtures script HEAD-then-GET fallbacks.
    """

    def __init__(self, directory: str | Path | None = None,
                 exchanges: list[Exchange] | None = None):
        if exchanges is None:
            exchanges = load_exchanges(directory) if directory is not None else []
        self._by_key: dict[tuple[str | None, str], Exchange] = {}
        self._urls: set[str] = set()
        for exchange in exchanges:
            key = (exchange.method, exchange.url)
            if key in self._by_key:
                raise ValueError(
                    f"duplicate fixture for {exchange.method or 'ANY'} "
                    f"{exchange.url} ({exchange.source})"
                )
            self._by_key[key] = exchange
            self._urls.add(exchange.url)
        self.requests: list[tuple[str, str]] = []

    def request(
        self,
        method: str,
        url: str,
        *,
        timeout: float | None = None,
        data: dict[str, str] | None = None,
    ) -> TransportResponse:
        method = method.upper()
        self.requests.append((method, url))
        exchange = self._by_key.get((method, url)) or self._by_key.get((None, url))
        if exchange is None:
            if url in self._urls:
                return TransportResponse(
                    url=url, status=405, headers=(("Allow", "GET"),)
                )
            raise TransportError("NETWORK_ERROR", f"no fixture for {method} {url}")
        if exchange.error is not None:
            raise TransportError(exchange.error, f"scripted {exchange.error} for {url}")
        body = b"" if method == "HEAD" else exchange.body
        return TransportResponse(
            url=url, status=exchange.status, headers=exchange.headers, body=body
        )


class RequestsTransport:
    """Live network backend; one requests session per thread.

    Redirects are never followed here: the fetcher implements its own
    redirect loop so the hop limit is enforced uniformly.
    """

    def __init__(self, user_agent: str = USER_AGENT):
        self.user_agent = user_agent
        self._local = threading.local()

    def _session(self):
        import requests

        session = getattr(self._local, "session", None)
        if session is None:
            session = requests.Session()
            session.headers["User-Agent"] = self.user_agent
            self._local.session = session
        return session

    def request(
        self,
        method: str,
        url: str,
        *,
        timeout: float | None = None,
        data: dict[str, str] | None = None,
    ) -> TransportResponse:
        import requests

        try:
            response = self._session().request(
                method,
                url,
                timeout=timeout,
                data=data,
                allow_redirects=False,
            )
        except requests.Timeout as exc:
            raise TransportError("TIMEOUT", str(exc)) from exc
        except requests.RequestException as exc:
            raise TransportError("NETWORK_ERROR", str(exc)) from exc
        raw = getattr(response.raw, "headers", None)
        pairs = tuple(raw.items()) if raw is not None else tuple(response.headers.items())
        return TransportResponse(
            url=url, status=response.status_code, headers=pairs, body=response.content
        )
