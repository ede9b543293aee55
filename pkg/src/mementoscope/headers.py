"""Memento-Datetime response header detection."""

from __future__ import annotations

from typing import Iterable, Mapping

# Both spellings occur in the wild; some archive stacks emit the
# underscore form. Comparison is case-insensitive.
_MEMENTO_HEADER_NAMES = frozenset({"memento-datetime", "memento_datetime"})

HeaderLike = Mapping[str, str] | Iterable[tuple[str, str]]


def _iter_headers(headers: HeaderLike) -> Iterable[tuple[str, str]]:
    if isinstance(headers, Mapping):
        return headers.items()
    return headers


def detect_memento_header(headers: HeaderLike) -> str | None:
    """Return the first Memento-Datetime header value, or None.

    ``headers`` may be a mapping or an iterable of (name, value) pairs; the
    first match in iteration order wins.  Absence is a normal result, not an
    error.
    """
    for name, value in _iter_headers(headers):
        if name.lower() in _MEMENTO_HEADER_NAMES:
            return value
    return None
