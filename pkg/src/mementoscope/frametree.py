"""Frame-tree model: a page's root document and its embedded frames.

Depth 0 is the root document; each embedded ``iframe``/``frame`` adds a
child one level deeper.  Nodes carry the response metadata the classifier
needs: HTTP status, any Memento-Datetime header (raw and parsed), and a
fetch-error tag when retrieval failed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .datestrings import MementoDatetime


@dataclass
class FrameNode:
    url: str
    final_url: str | None = None
    depth: int = 0
    status: int = 0
    memento_datetime: MementoDatetime | None = None
    # Raw Memento-Datetime header value when present, parseable or not.
    # A node with memento_header set but memento_datetime None claims to be
    # archival without a usable capture instant.
    memento_header: str | None = None
    fetch_error: str | None = None
    children: list["FrameNode"] = field(default_factory=list)

    @property
    def fetched_ok(self) -> bool:
        """True when this frame was retrieved with a 2xx response."""
        return self.fetch_error is None and 200 <= self.status < 300

    @property
    def claims_archival(self) -> bool:
        """True when the response carried a Memento-Datetime header at all."""
        return self.memento_header is not None or self.memento_datetime is not None

    def walk(self) -> Iterator["FrameNode"]:
        """Pre-order (document order) traversal of this subtree."""
        yield self
        for child in self.children:
            yield from child.walk()


@dataclass
class FrameTree:
    root: FrameNode
    requested_url: str | None = None

    def walk(self) -> Iterator[FrameNode]:
        return self.root.walk()

    def node_count(self) -> int:
        return sum(1 for _ in self.walk())


def validate_tree(tree: FrameTree) -> None:
    """Check the structural invariants; raises ValueError on violation.

    Children must sit exactly one level below their parent, the root at
    depth 0, and no node may resolve to the same final URL as any of its
    ancestors (the cycle guard the tree builder enforces).
    """
    if tree.root.depth != 0:
        raise ValueError(f"root depth must be 0, got {tree.root.depth}")

    def check(node: FrameNode, ancestor_urls: tuple[str, ...]) -> None:
        if node.final_url is not None and node.final_url in ancestor_urls:
            raise ValueError(f"cycle: {node.final_url} repeats an ancestor URL")
        urls = ancestor_urls + ((node.final_url,) if node.final_url else ())
        for child in node.children:
            if child.depth != node.depth + 1:
                raise ValueError(
                    f"child depth {child.depth} != parent depth {node.depth} + 1"
                )
            check(child, urls)

    check(tree.root, ())
