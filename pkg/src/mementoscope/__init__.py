"""mementoscope: memento detection, frame-tree classification, and
bookmark-as-archive tooling for the Memento protocol (RFC 7089)."""

from .archives import (
    ARCHIVE_TODAY,
    INTERNET_ARCHIVE,
    MEGALODON,
    KnownArchive,
    RedirectStyle,
    archive_by_id,
    archive_for_url,
    default_archives,
)
from .archiving import (
    ArchiveClient,
    ArchiveJob,
    JobState,
    append_archive_log,
    bookmark_with_archive,
    construct_archive_url,
    submit_and_resolve,
)
from .bookmarks import (
    BookmarkNode,
    BookmarkStore,
    NodeType,
    load_store,
    permanent_guid,
    save_store,
)
from .classify import MementoState, PageClassification, PageKind, classify_tree
from .config import AppConfig, load_config, make_transport
from .datestrings import (
    MementoDatetime,
    from_datestring14,
    parse_http_date,
    to_datestring14,
)
from .errors import (
    CorruptStore,
    EmptyTimeMap,
    InvalidScenario,
    MalformedDatestring,
    MalformedTimeMap,
    MementoscopeError,
    NoRedirectSupport,
    RootFetchFailed,
    StoreConflict,
    UnparseableDate,
)
from .fetcher import (
    FetchConfig,
    ResourceRecord,
    SubresourceReport,
    build_frame_tree,
    collect_resource_datetimes,
    extract_frames,
    fetch_resource,
)
from .fixtures import (
    Exchange,
    FixtureTransport,
    RequestsTransport,
    Transport,
    TransportError,
    TransportResponse,
    load_exchanges,
    parse_exchange,
)
from .frametree import FrameNode, FrameTree, validate_tree
from .headers import detect_memento_header
from .messages import badge_text, popup_lines
from .reports import AnalysisReport, analyze
from .service import create_app
from .timemaps import (
    MementoEntry,
    OffsetExperimentResult,
    OffsetScenario,
    TimeMap,
    classify_offset_case,
    closest_memento,
    offset_match_rate,
    parse_timemap,
    results_csv,
)

__version__ = "0.1.0"

__all__ = [
    "ARCHIVE_TODAY",
    "INTERNET_ARCHIVE",
    "MEGALODON",
    "AnalysisReport",
    "AppConfig",
    "ArchiveClient",
    "ArchiveJob",
    "BookmarkNode",
    "BookmarkStore",
    "CorruptStore",
    "EmptyTimeMap",
    "Exchange",
    "FetchConfig",
    "FixtureTransport",
    "FrameNode",
    "FrameTree",
    "InvalidScenario",
    "JobState",
    "KnownArchive",
    "MalformedDatestring",
    "MalformedTimeMap",
    "MementoDatetime",
    "MementoEntry",
    "MementoState",
    "MementoscopeError",
    "NoRedirectSupport",
    "NodeType",
    "OffsetExperimentResult",
    "OffsetScenario",
    "PageClassification",
    "PageKind",
    "RedirectStyle",
    "RequestsTransport",
    "ResourceRecord",
    "RootFetchFailed",
    "StoreConflict",
    "SubresourceReport",
    "TimeMap",
    "Transport",
    "TransportError",
    "TransportResponse",
    "UnparseableDate",
    "analyze",
    "append_archive_log",
    "archive_by_id",
    "archive_for_url",
    "badge_text",
    "bookmark_with_archive",
    "build_frame_tree",
    "classify_offset_case",
    "classify_tree",
    "closest_memento",
    "collect_resource_datetimes",
    "construct_archive_url",
    "create_app",
    "default_archives",
    "detect_memento_header",
    "extract_frames",
    "fetch_resource",
    "from_datestring14",
    "load_config",
    "load_exchanges",
    "load_store",
    "make_transport",
    "offset_match_rate",
    "parse_exchange",
    "parse_http_date",
    "parse_timemap",
    "permanent_guid",
    "results_csv",
    "popup_lines",
    "save_store",
    "submit_and_resolve",
    "to_datestring14",
    "validate_tree",
]
