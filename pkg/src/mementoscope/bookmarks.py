"""Bookmark tree with archive permanent nodes and JSON persistence.

Beyond the usual bookmark bar / other / mobile roots, the tree carries one
permanent folder per submission archive plus a "No Archive" folder, so a
bookmark can live under the archive it was submitted to.  Permanent nodes
have fixed, name-derived GUIDs and can never be moved or deleted.
"""

from __future__ import annotations

import json
import os
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Iterator

from .errors import CorruptStore, StoreConflict


class NodeType(str, Enum):
    URL = "URL"
    FOLDER = "FOLDER"
    BOOKMARK_BAR = "BOOKMARK_BAR"
    NO_ARCHIVE = "NO_ARCHIVE"
    ARCHIVE_TODAY = "ARCHIVE_TODAY"
    INTERNET_ARCHIVE = "INTERNET_ARCHIVE"
    MEGALODON = "MEGALODON"
    OTHER_NODE = "OTHER_NODE"
    MOBILE = "MOBILE"


# Every node type except URL and FOLDER names a permanent root.
PERMANENT_TYPES: tuple[NodeType, ...] = (
    NodeType.BOOKMARK_BAR,
    NodeType.NO_ARCHIVE,
    NodeType.ARCHIVE_TODAY,
    NodeType.INTERNET_ARCHIVE,
    NodeType.MEGALODON,
    NodeType.OTHER_NODE,
    NodeType.MOBILE,
)

PERMANENT_TITLES: dict[NodeType, str] = {
    NodeType.BOOKMARK_BAR: "Bookmarks bar",
    NodeType.NO_ARCHIVE: "No Archive",
    NodeType.ARCHIVE_TODAY: "Archive.today",
    NodeType.INTERNET_ARCHIVE: "Internet Archive",
    NodeType.MEGALODON: "Megalodon",
    NodeType.OTHER_NODE: "Other bookmarks",
    NodeType.MOBILE: "Mobile bookmarks",
}

_EPOCH = datetime(1970, 1, 1, tzinfo=timezone.utc)


def permanent_guid(node_type: NodeType) -> str:
    """Fixed GUID for a permanent node, identical across installs."""
    return str(uuid.uuid5(uuid.NAMESPACE_URL, f"mementoscope:bookmarks:{node_type.value}"))


def _node_guid(node_id: int) -> str:
    return str(uuid.uuid5(uuid.NAMESPACE_URL, f"mementoscope:bookmarks:node:{node_id}"))


@dataclass
class BookmarkNode:
    id: int
    guid: str
    node_type: NodeType
    title: str
    url: str | None = None
    created_at: datetime = _EPOCH
    children: list["BookmarkNode"] = field(default_factory=list)

    def __post_init__(self):
        if self.node_type is NodeType.URL:
            if self.url is None:
                raise ValueError("URL nodes need a url")
            if self.children:
                raise ValueError("URL nodes cannot have children")
        elif self.url is not None:
            raise ValueError(f"{self.node_type.value} nodes cannot carry a url")

    @property
    def is_folderish(self) -> bool:
        return self.node_type is not NodeType.URL

    @property
    def is_permanent(self) -> bool:
        return self.node_type in PERMANENT_TYPES

    def walk(self) -> Iterator["BookmarkNode"]:
        yield self
        for child in self.children:
            yield from child.walk()


class BookmarkStore:
    """In-memory bookmark tree; one instance per store file.

    All mutations go through methods that bump ``version`` and set the
    dirty flag; concurrent writers must serialize around the store (see
    the archive client's mutation queue).
    """

    def __init__(self):
        self.version = 0
        self.dirty = False
        self._next_id = 1
        self.roots: dict[NodeType, BookmarkNode] = {}
        for node_type in PERMANENT_TYPES:
            self.roots[node_type] = BookmarkNode(
                id=self._take_id(),
                guid=permanent_guid(node_type),
                node_type=node_type,
                title=PERMANENT_TITLES[node_type],
            )

    def _take_id(self) -> int:
        node_id = self._next_id
        self._next_id += 1
        return node_id

    def _touch(self):
        self.version += 1
        self.dirty = True

    # ------------------------------------------------------------ queries
    def walk(self) -> Iterator[BookmarkNode]:
        for root in self.roots.values():
            yield from root.walk()

    def node_by_id(self, node_id: int) -> BookmarkNode | None:
        for node in self.walk():
            if node.id == node_id:
                return node
        return None

    def parent_of(self, node: BookmarkNode) -> BookmarkNode | None:
        for candidate in self.walk():
            if node in candidate.children:
                return candidate
        return None

    def find_url_bookmark(self, url: str) -> BookmarkNode | None:
        """First URL node bookmarking ``url``, in tree order."""
        for node in self.walk():
            if node.node_type is NodeType.URL and node.url == url:
                return node
        return None

    # ---------------------------------------------------------- mutations
    def add_url(
        self,
        parent: BookmarkNode,
        title: str,
        url: str,
        created_at: datetime = _EPOCH,
    ) -> BookmarkNode:
        return self._add(parent, NodeType.URL, title, url, created_at)

    def add_folder(
        self, parent: BookmarkNode, title: str, created_at: datetime = _EPOCH
    ) -> BookmarkNode:
        return self._add(parent, NodeType.FOLDER, title, None, created_at)

    def _add(self, parent, node_type, title, url, created_at) -> BookmarkNode:
        if not parent.is_folderish:
            raise StoreConflict("cannot add children to a URL node")
        if self.node_by_id(parent.id) is not parent:
            raise StoreConflict(f"parent id {parent.id} is not in this store")
        node_id = self._take_id()
        node = BookmarkNode(
            id=node_id,
            guid=_node_guid(node_id),
            node_type=node_type,
            title=title,
            url=url,
            created_at=created_at,
        )
        parent.children.append(node)
        self._touch()
        return node

    def move(self, node: BookmarkNode, new_parent: BookmarkNode) -> None:
        if node.is_permanent:
            raise StoreConflict("permanent nodes cannot be moved")
        if not new_parent.is_folderish:
            raise StoreConflict("cannot move under a URL node")
        if any(candidate is new_parent for candidate in node.walk()):
            raise StoreConflict("cannot move a node under its own subtree")
        parent = self.parent_of(node)
        if parent is None:
            raise StoreConflict(f"node id {node.id} is not in this store")
        parent.children.remove(node)
        new_parent.children.append(node)
        self._touch()

    def remove(self, node: BookmarkNode) -> None:
        if node.is_permanent:
            raise StoreConflict("permanent nodes cannot be removed")
        parent = self.parent_of(node)
        if parent is None:
            raise StoreConflict(f"node id {node.id} is not in this store")
        parent.children.remove(node)
        self._touch()

    def set_url(self, node: BookmarkNode, url: str) -> None:
        if node.node_type is not NodeType.URL:
            raise StoreConflict("only URL nodes carry a url")
        node.url = url
        self._touch()

    def set_title(self, node: BookmarkNode, title: str) -> None:
        if node.is_permanent:
            raise StoreConflict("permanent nodes cannot be retitled")
        node.title = title
        self._touch()

    # ------------------------------------------------------------- equality
    def __eq__(self, other) -> bool:
        if not isinstance(other, BookmarkStore):
            return NotImplemented
        return self.version == other.version and all(
            _nodes_equal(self.roots[t], other.roots[t]) for t in PERMANENT_TYPES
        )


def _nodes_equal(a: BookmarkNode, b: BookmarkNode) -> bool:
    return (
        a.id == b.id
        and a.guid == b.guid
        and a.node_type == b.node_type
        and a.title == b.title
        and a.url == b.url
        and a.created_at == b.created_at
        and len(a.children) == len(b.children)
        and all(_nodes_equal(x, y) for x, y in zip(a.children, b.children))
    )


# ------------------------------------------------------------ persistence
def _node_to_json(node: BookmarkNode) -> dict:
    data = {
        "id": node.id,
        "guid": node.guid,
        "type": node.node_type.value,
        "title": node.title,
        "url": node.url,
        "created_at": node.created_at.strftime("%Y-%m-%dT%H:%M:%SZ"),
    }
    if node.is_folderish:
        data["children"] = [_node_to_json(child) for child in node.children]
    return data


def _node_from_json(data: dict) -> BookmarkNode:
    try:
        created = datetime.strptime(data["created_at"], "%Y-%m-%dT%H:%M:%SZ").replace(
            tzinfo=timezone.utc
        )
        node = BookmarkNode(
            id=data["id"],
            guid=data["guid"],
            node_type=NodeType(data["type"]),
            title=data["title"],
            url=data.get("url"),
            created_at=created,
        )
        for child in data.get("children", ()):
            node.children.append(_node_from_json(child))
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptStore(f"bad bookmark node: {exc}") from exc
    return node


def store_document(store: BookmarkStore) -> dict:
    """JSON-ready document for the whole store (also the file schema)."""
    return {
        "version": store.version,
        "next_id": store._next_id,
        "roots": [_node_to_json(store.roots[t]) for t in PERMANENT_TYPES],
    }


def save_store(store: BookmarkStore, path: str | Path) -> None:
    """Atomic JSON write; clears the dirty flag."""
    path = Path(path)
    text = json.dumps(store_document(store), indent=2) + "\n"
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)
    store.dirty = False


def load_store(path: str | Path) -> BookmarkStore:
    """Load a store file; a missing file yields a fresh store."""
    path = Path(path)
    if not path.exists():
        return BookmarkStore()
    raw = path.read_text(encoding="utf-8")
    try:
        document = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise CorruptStore(f"unparseable store file: {exc}", offset=exc.pos) from exc

    store = BookmarkStore()
    try:
        roots = document["roots"]
        loaded_types = []
        for root_data in roots:
            root = _node_from_json(root_data)
            if root.node_type not in PERMANENT_TYPES:
                raise CorruptStore(f"root of type {root.node_type.value} not permanent")
            loaded_types.append(root.node_type)
            store.roots[root.node_type] = root
        if sorted(t.value for t in loaded_types) != sorted(
            t.value for t in PERMANENT_TYPES
        ):
            raise CorruptStore("store must contain each permanent node exactly once")
        store.version = document["version"]
        store._next_id = document["next_id"]
    except (KeyError, TypeError) as exc:
        raise CorruptStore(f"bad store document: {exc}") from exc

    ids = [node.id for node in store.walk()]
    if len(ids) != len(set(ids)):
        raise CorruptStore("duplicate node ids")
    if ids and max(ids) >= store._next_id:
        raise CorruptStore("next_id does not clear existing ids")
    store.dirty = False
    return store
