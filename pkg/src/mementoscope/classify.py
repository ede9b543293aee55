"""Frame-tree classification into page-level memento states.

A rendered page falls into one of five kinds:

* LIVE - no archival signal anywhere that affects the page.
* ROOT_MEMENTO - the root document itself returned Memento-Datetime.
* PROMOTED_IFRAME_MEMENTO - a live wrapper page whose single depth-1
  memento frame is hosted by an archive that displays captures inside an
  iframe (Trove, Perma.cc); the frame's datetime is promoted to the page.
* MIXED_LIVE_ARCHIVAL - a live page embedding one or more memento frames.
* ZOMBIE_MEMENTO - an archival frame anywhere in the tree is displaying
  successfully-fetched live content inside itself, so the page as rendered
  never existed at its claimed datetime.

Classification rules:

* Only depth-1 frames contribute to the page's datetime list; deeper
  memento frames are reported separately and never change the kind.
* The zombie check dominates every other kind and applies at any depth,
  including inside a promoted subtree.
* A frame whose fetch failed is neutral for the zombie check; only a
  successfully fetched (2xx) frame with no Memento-Datetime header counts
  as live content leaking into an archival parent.
* A Memento-Datetime header that fails to parse still marks its frame as
  archival (it suppresses the zombie check and, at the root, keeps the
  zombie path open) but contributes no datetime anywhere; if such headers
  are the page's only signal they are surfaced in ``unparsed_headers`` and
  the page stays LIVE.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .archives import KnownArchive
from .datestrings import MementoDatetime
from .frametree import FrameNode, FrameTree


class PageKind(str, Enum):
    LIVE = "LIVE"
    ROOT_MEMENTO = "ROOT_MEMENTO"
    PROMOTED_IFRAME_MEMENTO = "PROMOTED_IFRAME_MEMENTO"
    MIXED_LIVE_ARCHIVAL = "MIXED_LIVE_ARCHIVAL"
    ZOMBIE_MEMENTO = "ZOMBIE_MEMENTO"


@dataclass(frozen=True)
class MementoState:
    """Page-level memento flags, mirroring the navigation-entry variables."""

    memento_info: bool = False
    memento_datetime: MementoDatetime | None = None
    memento_dates: tuple[MementoDatetime, ...] = ()
    mixed_memento_live_web: bool = False

    def __post_init__(self):
        if self.memento_datetime is not None and not self.memento_info:
            raise ValueError("memento_datetime present requires memento_info")
        if self.memento_dates and not self.memento_info:
            raise ValueError("memento_dates non-empty requires memento_info")
        if self.mixed_memento_live_web and not self.memento_info:
            raise ValueError("mixed_memento_live_web requires memento_info")


@dataclass(frozen=True)
class PageClassification:
    kind: PageKind
    state: MementoState
    # Memento frames at depth >= 2: report-only, never affects the kind.
    deep_dates: tuple[tuple[str, MementoDatetime], ...] = ()
    # Frames whose Memento-Datetime header did not parse: (url, raw value).
    unparsed_headers: tuple[tuple[str, str], ...] = ()


def _zombie_present(root: FrameNode) -> bool:
    """Any archival frame with a successfully fetched, header-less child."""
    for node in root.walk():
        if not node.claims_archival:
            continue
        for child in node.children:
            if not child.claims_archival and child.fetched_ok:
                return True
    return False


def _promoted_frame(
    root: FrameNode, archives: list[KnownArchive]
) -> FrameNode | None:
    """The lone depth-1 memento frame served by an iframe-display archive.

    Promotion applies only when the root itself has no parseable datetime
    and exactly one depth-1 frame does, and that frame's host belongs to an
    archive known to present mementos inside an iframe.
    """
    if root.memento_datetime is not None:
        return None
    dated = [c for c in root.children if c.memento_datetime is not None]
    if len(dated) != 1:
        return None
    frame = dated[0]
    host_url = frame.final_url or frame.url
    for archive in archives:
        if archive.iframe_display and archive.matches_url(host_url):
            return frame
    return None


def classify_tree(
    tree: FrameTree, archives: list[KnownArchive] | None = None
) -> PageClassification:
    """Classify a well-formed frame tree; total over all such trees."""
    archives = archives or []
    root = tree.root

    memento_dates = tuple(
        c.memento_datetime
        for c in root.children
        if c.memento_datetime is not None
    )
    deep_dates = tuple(
        (node.final_url or node.url, node.memento_datetime)
        for node in root.walk()
        if node.depth >= 2 and node.memento_datetime is not None
    )
    unparsed = tuple(
        (node.final_url or node.url, node.memento_header)
        for node in root.walk()
        if node.memento_header is not None and node.memento_datetime is None
    )

    zombie = _zombie_present(root)
    promoted = _promoted_frame(root, archives)
    page_datetime = root.memento_datetime or (
        promoted.memento_datetime if promoted is not None else None
    )

    if zombie:
        kind = PageKind.ZOMBIE_MEMENTO
        state = MementoState(
            memento_info=True,
            memento_datetime=page_datetime,
            memento_dates=memento_dates,
            mixed_memento_live_web=True,
        )
    elif root.memento_datetime is not None:
        kind = PageKind.ROOT_MEMENTO
        state = MementoState(
            memento_info=True,
            memento_datetime=root.memento_datetime,
            memento_dates=memento_dates,
        )
    elif promoted is not None:
        kind = PageKind.PROMOTED_IFRAME_MEMENTO
        state = MementoState(
            memento_info=True,
            memento_datetime=promoted.memento_datetime,
            memento_dates=memento_dates,
        )
    elif memento_dates:
        kind = PageKind.MIXED_LIVE_ARCHIVAL
        state = MementoState(memento_info=True, memento_dates=memento_dates)
    else:
        kind = PageKind.LIVE
        state = MementoState()

    return PageClassification(
        kind=kind, state=state, deep_dates=deep_dates, unparsed_headers=unparsed
    )
