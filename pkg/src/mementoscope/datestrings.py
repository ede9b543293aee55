"""Memento datetime parsing and the 14-digit archive datestring format.

Archived responses advertise their capture time through the
``Memento-Datetime`` HTTP response header (an RFC 1123 date).  Web archives
additionally embed the same instant in URLs as a 14-digit ``YYYYMMDDHHMMSS``
string.  Both representations have second granularity and are always UTC.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timezone
from email.utils import parsedate_to_datetime

from .errors import MalformedDatestring, UnparseableDate

# Sanity bounds for capture years; web archiving predates nothing before
# the early 1990s and far-future instants indicate header corruption.
MIN_YEAR = 1990
MAX_YEAR = 2100

DATESTRING14_FORMAT = "%Y%m%d%H%M%S"


@dataclass(frozen=True)
class MementoDatetime:
    """A capture instant plus the verbatim header text it came from.

    Equality and hashing consider only the instant: the same capture moment
    parsed from an HTTP date and from a 14-digit datestring compares equal.
    """

    instant: datetime
    raw: str = field(compare=False)

    def __post_init__(self):
        if self.instant.tzinfo is None or self.instant.utcoffset().total_seconds() != 0:
            raise ValueError("instant must be timezone-aware UTC")
        if self.instant.microsecond != 0:
            raise ValueError("instant must have second granularity")

    def isoformat(self) -> str:
        return self.instant.strftime("%Y-%m-%dT%H:%M:%SZ")

    def date_ymd(self) -> str:
        """The capture date in YYYY-MM-DD form, as shown next to the badge."""
        return self.instant.strftime("%Y-%m-%d")


def _check_year(instant: datetime, min_year: int, max_year: int, exc_type) -> None:
    if not min_year <= instant.year <= max_year:
        raise exc_type(
            f"year {instant.year} outside sanity bounds [{min_year}, {max_year}]"
        )


def parse_http_date(
    raw: str, *, min_year: int = MIN_YEAR, max_year: int = MAX_YEAR
) -> MementoDatetime:
    """Parse an HTTP-date header value (RFC 1123 form) into a MementoDatetime.

    Leading/trailing whitespace is tolerated; the ``raw`` attribute of the
    result preserves the input verbatim.  Raises UnparseableDate for
    anything that is not an HTTP date.
    """
    if not isinstance(raw, str) or not raw.strip():
        raise UnparseableDate(f"not an HTTP date: {raw!r}")
    try:
        parsed = parsedate_to_datetime(raw.strip())
    except (TypeError, ValueError) as exc:
        raise UnparseableDate(f"not an HTTP date: {raw!r}") from exc
    if parsed is None:
        raise UnparseableDate(f"not an HTTP date: {raw!r}")
    if parsed.tzinfo is None:
        # '-0000' and bare dates parse naive; header dates are GMT by spec.
        parsed = parsed.replace(tzinfo=timezone.utc)
    instant = parsed.astimezone(timezone.utc).replace(microsecond=0)
    _check_year(instant, min_year, max_year, UnparseableDate)
    return MementoDatetime(instant=instant, raw=raw)


def to_datestring14(dt: MementoDatetime | datetime) -> str:
    """Render a capture instant as the 14-digit ``YYYYMMDDHHMMSS`` string."""
    instant = dt.instant if isinstance(dt, MementoDatetime) else dt
    if instant.tzinfo is not None:
        instant = instant.astimezone(timezone.utc)
    return instant.strftime(DATESTRING14_FORMAT)


def from_datestring14(
    s: str, *, min_year: int = MIN_YEAR, max_year: int = MAX_YEAR
) -> MementoDatetime:
    """Parse a 14-digit ``YYYYMMDDHHMMSS`` datestring.

    Raises MalformedDatestring on wrong length, non-digits, or impossible
    calendar datetimes (e.g. month 13).
    """
    if not isinstance(s, str) or len(s) != 14 or not s.isdigit():
        raise MalformedDatestring(f"expected 14 ASCII digits, got {s!r}")
    try:
        instant = datetime.strptime(s, DATESTRING14_FORMAT).replace(
            tzinfo=timezone.utc
        )
    except ValueError as exc:
        raise MalformedDatestring(f"impossible datetime: {s!r}") from exc
    _check_year(instant, min_year, max_year, MalformedDatestring)
    return MementoDatetime(instant=instant, raw=s)
