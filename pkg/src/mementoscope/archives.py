"""Known web archives: recognition patterns and submission endpoints.

The default list covers the public archives this engine recognizes by
hostname.  Two of them (Trove, Perma.cc) present mementos inside an iframe
on a live wrapper page, which matters for whole-page promotion; three of
them (Internet Archive, Archive.today, Megalodon) accept submissions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from urllib.parse import urlsplit


class RedirectStyle(str, Enum):
    # Archive resolves an arbitrary 14-digit datestring URL to the nearest
    # memento it holds.
    NEAREST_DATETIME = "NEAREST_DATETIME"
    NONE = "NONE"


@dataclass(frozen=True)
class KnownArchive:
    id: str
    display_name: str
    host_patterns: tuple[str, ...]
    iframe_display: bool = False
    redirect_style: RedirectStyle = RedirectStyle.NONE
    # Base for datestring-redirect URLs, e.g. https://web.archive.org/web
    redirect_base: str | None = None
    # Endpoint accepting save/submit requests; None means not submittable.
    submit_endpoint: str | None = None

    def __post_init__(self):
        if not self.host_patterns:
            raise ValueError(f"archive {self.id!r} needs at least one host pattern")

    def matches_host(self, host: str | None) -> bool:
        if not host:
            return False
        host = host.lower().rstrip(".")
        for pattern in self.host_patterns:
            pattern = pattern.lower()
            if host == pattern or host.endswith("." + pattern):
                return True
        return False

    def matches_url(self, url: str | None) -> bool:
        if not url:
            return False
        return self.matches_host(urlsplit(url).hostname)


# Submission archive ids (the bookmark dropdown options besides "None").
INTERNET_ARCHIVE = "internet_archive"
ARCHIVE_TODAY = "archive_today"
MEGALODON = "megalodon"


def default_archives() -> list[KnownArchive]:
    """The built-in archive list; users can override it in the app config."""
    return [
        KnownArchive(
            id="archive_it",
            display_name="Archive-It",
            host_patterns=("archive-it.org",),
        ),
        KnownArchive(
            id=ARCHIVE_TODAY,
            display_name="Archive.today",
            host_patterns=(
                "archive.today",
                "archive.is",
                "archive.ph",
                "archive.li",
                "archive.vn",
                "archive.fo",
                "archive.md",
            ),
            redirect_style=RedirectStyle.NEAREST_DATETIME,
            redirect_base="https://archive.is",
            submit_endpoint="https://archive.ph/submit/",
        ),
        KnownArchive(
            id="trove",
            display_name="Australian Web Archive (Trove)",
            host_patterns=("nla.gov.au",),
            iframe_display=True,
        ),
        KnownArchive(
            id="banq",
            display_name="BAnQ",
            host_patterns=("banq.qc.ca",),
        ),
        KnownArchive(
            id="bibalex",
            display_name="Bibliotheca Alexandrina Web Archive",
            host_patterns=("bibalex.org",),
        ),
        KnownArchive(
            id="icelandic",
            display_name="Icelandic Web Archive",
            host_patterns=("vefsafn.is",),
        ),
        KnownArchive(
            id=INTERNET_ARCHIVE,
            display_name="Internet Archive",
            host_patterns=("archive.org",),
            redirect_style=RedirectStyle.NEAREST_DATETIME,
            redirect_base="https://web.archive.org/web",
            submit_endpoint="https://web.archive.org/save",
        ),
        KnownArchive(
            id="lac",
            display_name="Library and Archives Canada",
            host_patterns=("bac-lac.gc.ca",),
        ),
        KnownArchive(
            id="loc",
            display_name="Library of Congress",
            host_patterns=("loc.gov",),
        ),
        KnownArchive(
            id="nrscotland",
            display_name="National Records of Scotland",
            host_patterns=("nrscotland.gov.uk",),
        ),
        KnownArchive(
            id="permacc",
            display_name="Perma Archive (Perma.cc)",
            host_patterns=("perma.cc", "perma-archives.org"),
            iframe_display=True,
        ),
        KnownArchive(
            id="arquivo",
            display_name="Portuguese Web Archive",
            host_patterns=("arquivo.pt",),
        ),
        KnownArchive(
            id="stanford",
            display_name="Stanford Web Archive",
            host_patterns=("swap.stanford.edu",),
        ),
        KnownArchive(
            id="uk_national_archives",
            display_name="UK National Archives Web Archive",
            host_patterns=("nationalarchives.gov.uk",),
        ),
        KnownArchive(
            id="uk_parliament",
            display_name="UK Parliament Web Archive",
            host_patterns=("parliament.uk",),
        ),
        KnownArchive(
            id="uk_web_archive",
            display_name="UK Web Archive",
            host_patterns=("webarchive.org.uk",),
        ),
        # Not a recognition archive per se, but one of the three submission
        # targets; no datestring redirect support.
        KnownArchive(
            id=MEGALODON,
            display_name="Megalodon",
            host_patterns=("megalodon.jp",),
            submit_endpoint="https://megalodon.jp/pc/get_simple/decide",
        ),
    ]


def archive_by_id(archives: list[KnownArchive], archive_id: str) -> KnownArchive | None:
    for archive in archives:
        if archive.id == archive_id:
            return archive
    return None


def archive_for_url(archives: list[KnownArchive], url: str | None) -> KnownArchive | None:
    """First archive whose host patterns match the URL's hostname."""
    for archive in archives:
        if archive.matches_url(url):
            return archive
    return None
