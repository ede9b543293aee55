"""User-facing badge and popup strings for a page classification.

The badge is the short text shown next to the memento icon; the popup is
the expanded detail list shown when the icon is clicked.  Strings here are
stable: the dashboard displays them verbatim and golden tests pin them.
"""

from __future__ import annotations

from .classify import PageClassification, PageKind

BADGE_MIXED = "Mixed archival content"
BADGE_ZOMBIE = "Memento + live content"

POPUP_CAPTURED_PREFIX = "The page displayed is a memento captured on "
POPUP_MIXED_HEADER = "This page displays a mix of live and archived content."
POPUP_LIVE_LEAK_WARNING = (
    "Warning: this archived page is displaying content from the live web."
)


def badge_text(classification: PageClassification) -> str | None:
    """Badge next to the memento icon; None means no icon at all."""
    kind = classification.kind
    if kind is PageKind.LIVE:
        return None
    if kind in (PageKind.ROOT_MEMENTO, PageKind.PROMOTED_IFRAME_MEMENTO):
        return classification.state.memento_datetime.date_ymd()
    if kind is PageKind.MIXED_LIVE_ARCHIVAL:
        return BADGE_MIXED
    return BADGE_ZOMBIE


def popup_lines(classification: PageClassification) -> list[str]:
    """Detail lines for the memento info popup, top to bottom."""
    kind = classification.kind
    state = classification.state

    if kind is PageKind.LIVE:
        return []

    if kind in (PageKind.ROOT_MEMENTO, PageKind.PROMOTED_IFRAME_MEMENTO):
        return [POPUP_CAPTURED_PREFIX + state.memento_datetime.raw]

    if kind is PageKind.MIXED_LIVE_ARCHIVAL:
        lines = [POPUP_MIXED_HEADER]
        lines.extend(dt.raw for dt in state.memento_dates)
        return lines

    # Zombie: lead with the page's claimed capture when known, otherwise
    # with whatever archival dates the page does carry, then the warning.
    lines = []
    if state.memento_datetime is not None:
        lines.append(POPUP_CAPTURED_PREFIX + state.memento_datetime.raw)
    elif state.memento_dates:
        lines.append(POPUP_MIXED_HEADER)
        lines.extend(dt.raw for dt in state.memento_dates)
    lines.append(POPUP_LIVE_LEAK_WARNING)
    return lines
