// Bookmark tree view: the permanent roots with their folders, live
// bookmarks, and archive nodes. Node URLs are shown so an archive job
// completing (which rewrites the node URL) is visible here.

import type { BookmarkNodeJson, StoreDocumentJson } from "../api";
import { el } from "../dom";

export function renderBookmarkTree(doc: StoreDocumentJson): HTMLElement {
  const tree = el("div", "bookmark-tree");
  for (const root of doc.roots) {
    tree.append(renderNode(root));
  }
  return tree;
}

function renderNode(node: BookmarkNodeJson): HTMLElement {
  const item = el("div", `tree-node tree-${node.type.toLowerCase()}`);
  item.dataset.nodeId = String(node.id);

  const line = el("div", "node-line");
  line.append(el("span", "node-title", node.title));
  if (node.url !== null) {
    line.append(el("span", "node-url", node.url));
  }
  item.append(line);

  if (node.children && node.children.length > 0) {
    const children = el("div", "node-children");
    for (const child of node.children) {
      children.append(renderNode(child));
    }
    item.append(children);
  }
  return item;
}
