"""TimeMap ingestion, closest-memento resolution, and offset evaluation.

A TimeMap is the machine-readable list of every known memento for an
original resource.  Archives that support datestring URLs redirect an
arbitrary requested datetime to the closest memento they hold; the
functions here model that resolution and measure how often adding a fixed
offset to the request time changes which memento wins.
"""

from __future__ import annotations

import bisect
import csv
import io
from dataclasses import dataclass
from datetime import datetime, timedelta
from typing import Iterable

from .datestrings import MementoDatetime, parse_http_date
from .errors import EmptyTimeMap, InvalidScenario, MalformedTimeMap, UnparseableDate


@dataclass(frozen=True)
class MementoEntry:
    uri_m: str
    datetime: MementoDatetime


@dataclass(frozen=True)
class TimeMap:
    original_uri: str
    entries: tuple[MementoEntry, ...]

    def __post_init__(self):
        instants = [e.datetime.instant for e in self.entries]
        if instants != sorted(instants):
            raise ValueError("timemap entries must be sorted ascending by datetime")


@dataclass(frozen=True)
class OffsetExperimentResult:
    offset_seconds: int
    samples: int
    matches: int

    @property
    def match_rate(self) -> float:
        return self.matches / self.samples if self.samples else 0.0


@dataclass(frozen=True)
class OffsetScenario:
    """One bookmark-as-archive timeline.

    ``m1`` is the latest memento before the bookmark request at ``t1``;
    ``x`` is the offset added to the request time; ``mc`` is when the
    bookmark-triggered capture lands; ``m2``, when present, is an
    interfering capture created by someone else after ``t1``.
    """

    m1: datetime
    t1: datetime
    x: int
    mc: datetime
    m2: datetime | None = None


def _split_quoted(text: str, sep: str) -> list[str]:
    """Split on ``sep`` outside double quotes and angle brackets."""
    parts: list[str] = []
    buf: list[str] = []
    in_quote = False
    in_angle = False
    for ch in text:
        if ch == '"' and not in_angle:
            in_quote = not in_quote
        elif ch == "<" and not in_quote:
            in_angle = True
        elif ch == ">" and not in_quote:
            in_angle = False
        if ch == sep and not in_quote and not in_angle:
            parts.append("".join(buf))
            buf = []
        else:
            buf.append(ch)
    parts.append("".join(buf))
    return parts


def _parse_link(segment: str) -> tuple[str, dict[str, str]] | None:
    segment = segment.strip()
    if not segment.startswith("<"):
        return None
    end = segment.find(">")
    if end < 0:
        return None
    uri = segment[1:end]
    params: dict[str, str] = {}
    for param in _split_quoted(segment[end + 1 :], ";"):
        param = param.strip()
        if not param or "=" not in param:
            continue
        name, _, value = param.partition("=")
        value = value.strip()
        if len(value) >= 2 and value[0] == '"' and value[-1] == '"':
            value = value[1:-1]
        params.setdefault(name.strip().lower(), value)
    return uri, params


def parse_timemap(body: str) -> TimeMap:
    """Parse link-format TimeMap text.

    Keeps links whose rel contains the ``memento`` token and that carry a
    parseable datetime attribute; raises MalformedTimeMap when the original
    link is missing or no memento link parses.
    """
    original_uri: str | None = None
    entries: list[MementoEntry] = []
    for segment in _split_quoted(body, ","):
        link = _parse_link(segment)
        if link is None:
            continue
        uri, params = link
        rel_tokens = params.get("rel", "").split()
        if "original" in rel_tokens and original_uri is None:
            original_uri = uri
        if "memento" not in rel_tokens:
            continue
        raw_datetime = params.get("datetime")
        if raw_datetime is None:
            continue
        try:
            parsed = parse_http_date(raw_datetime)
        except UnparseableDate:
            continue
        entries.append(MementoEntry(uri_m=uri, datetime=parsed))

    if original_uri is None:
        raise MalformedTimeMap("no link with rel=original")
    if not entries:
        raise MalformedTimeMap("no parseable memento links")
    entries.sort(key=lambda e: e.datetime.instant)
    return TimeMap(original_uri=original_uri, entries=tuple(entries))


def _closest_index(instants: list[datetime], instant: datetime) -> int:
    i = bisect.bisect_left(instants, instant)
    if i == 0:
        j = 0
    elif i == len(instants):
        j = len(instants) - 1
    # At the exact midpoint the earlier memento wins.
    elif instant - instants[i - 1] <= instants[i] - instant:
        j = i - 1
    else:
        j = i
    # Equal datetimes may repeat; the earliest-listed one is canonical.
    return bisect.bisect_left(instants, instants[j])


def closest_memento(tm: TimeMap, t: datetime | MementoDatetime) -> MementoEntry:
    """The entry whose datetime minimizes |datetime - t|; ties go earlier."""
    if not tm.entries:
        raise EmptyTimeMap("timemap has no entries")
    instant = t.instant if isinstance(t, MementoDatetime) else t
    instants = [e.datetime.instant for e in tm.entries]
    return tm.entries[_closest_index(instants, instant)]


def offset_match_rate(
    tm: TimeMap,
    start: datetime,
    end: datetime,
    step_seconds: int = 1,
    offset_seconds: int = 0,
) -> OffsetExperimentResult:
    """How often closest(t) == closest(t + offset) for t over [start, end].

    Samples every ``step_seconds`` from ``start`` up to and including
    ``end``; only second granularity is meaningful since memento datetimes
    have second granularity.
    """
    if start > end:
        raise ValueError("start must not be after end")
    if step_seconds < 1:
        raise ValueError("step_seconds must be >= 1")
    if not tm.entries:
        raise EmptyTimeMap("timemap has no entries")

    offset = timedelta(seconds=offset_seconds)
    step = timedelta(seconds=step_seconds)
    instants = [e.datetime.instant for e in tm.entries]
    samples = 0
    matches = 0
    t = start
    while t <= end:
        samples += 1
        if _closest_index(instants, t) == _closest_index(instants, t + offset):
            matches += 1
        t += step
    return OffsetExperimentResult(
        offset_seconds=offset_seconds, samples=samples, matches=matches
    )


def results_csv(results: Iterable[OffsetExperimentResult]) -> str:
    """Experiment results as CSV: offset, samples, matches, rate."""
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow(["offset", "samples", "matches", "rate"])
    for result in results:
        writer.writerow(
            [
                result.offset_seconds,
                result.samples,
                result.matches,
                f"{result.match_rate:.4f}",
            ]
        )
    return out.getvalue()


def _scenario_timemap(s: OffsetScenario) -> TimeMap:
    captures = [("urn:scenario:m1", s.m1), ("urn:scenario:mc", s.mc)]
    if s.m2 is not None:
        captures.append(("urn:scenario:m2", s.m2))
    captures.sort(key=lambda pair: pair[1])
    entries = tuple(
        MementoEntry(
            uri_m=uri,
            datetime=MementoDatetime(
                instant=instant, raw=instant.strftime("%Y%m%d%H%M%S")
            ),
        )
        for uri, instant in captures
    )
    return TimeMap(original_uri="urn:scenario:original", entries=entries)


def classify_offset_case(s: OffsetScenario) -> tuple[int, bool]:
    """Place a bookmark timeline into one of the four offset cases.

    Success means the datestring ``t1 + x`` resolves to the bookmark's own
    capture MC.  Cases: 1 = no interference and success, 2 = no
    interference and failure (archive too slow for the offset), 3 =
    interfering capture M2 but still success, 4 = M2 steals the
    resolution.
    """
    if not s.m1 <= s.t1 <= s.mc:
        raise InvalidScenario("scenario requires m1 <= t1 <= mc")
    if s.m2 is not None and not s.m2 > s.t1:
        raise InvalidScenario("interfering memento m2 must come after t1")
    if s.x < 0:
        raise InvalidScenario("offset must be non-negative")

    tm = _scenario_timemap(s)
    resolved = closest_memento(tm, s.t1 + timedelta(seconds=s.x))
    success = resolved.uri_m == "urn:scenario:mc"
    if s.m2 is None:
        case = 1 if success else 2
    else:
        case = 3 if success else 4
    return case, success
