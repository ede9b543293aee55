// Bookmark dialog: name field plus the archive dropdown. The dropdown is
// "None" followed by every configured archive that accepts submissions,
// labelled with the server-provided display names.

import type { ArchiveInfoJson, BookmarkBody } from "../api";
import { el } from "../dom";

export interface ArchiveOption {
  value: string;
  label: string;
}

export function archiveOptions(archives: ArchiveInfoJson[]): ArchiveOption[] {
  const options: ArchiveOption[] = [{ value: "none", label: "None" }];
  for (const archive of archives) {
    if (archive.submit_endpoint !== null) {
      options.push({ value: archive.id, label: archive.display_name });
    }
  }
  return options;
}

export interface BookmarkDialogHandlers {
  onDone: (body: BookmarkBody) => void;
  onCancel: () => void;
}

export function renderBookmarkDialog(
  url: string,
  options: ArchiveOption[],
  handlers: BookmarkDialogHandlers,
): HTMLElement {
  const backdrop = el("div", "dialog-backdrop");
  const form = el("form", "bookmark-dialog");

  form.append(el("h3", undefined, "Bookmark"));
  form.append(el("p", "dialog-url", url));

  const nameLabel = el("label", undefined, "Name ");
  const nameInput = el("input", "dialog-name");
  nameInput.name = "title";
  nameInput.placeholder = url;
  nameLabel.append(nameInput);
  form.append(nameLabel);

  const archiveLabel = el("label", undefined, "Archive ");
  const select = el("select", "archive-dropdown");
  select.name = "archive";
  for (const option of options) {
    const item = el("option", undefined, option.label);
    item.value = option.value;
    select.append(item);
  }
  archiveLabel.append(select);
  form.append(archiveLabel);

  const buttons = el("div", "dialog-buttons");
  const done = el("button", "dialog-done", "Done");
  done.type = "submit";
  const cancel = el("button", "dialog-cancel", "Cancel");
  cancel.type = "button";
  cancel.addEventListener("click", () => handlers.onCancel());
  buttons.append(done, cancel);
  form.append(buttons);

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const body: BookmarkBody = { url, archive: select.value };
    const title = nameInput.value.trim();
    if (title) {
      body.title = title;
    }
    handlers.onDone(body);
  });

  backdrop.append(form);
  return backdrop;
}
