// Wires the components to the API: analyze form and cards, bookmark
// dialog, job polling, and the bookmark tree. No classification logic
// lives here; the server's strings are rendered verbatim.

import {
  api,
  ApiError,
  type ArchiveInfoJson,
  type BookmarkBody,
  type BookmarkResponseJson,
  type JobJson,
} from "./api";
import { renderAnalyzeCard } from "./components/analyzeCard";
import {
  archiveOptions,
  renderBookmarkDialog,
  type ArchiveOption,
} from "./components/bookmarkDialog";
import { renderBookmarkTree } from "./components/bookmarkTree";
import { el } from "./dom";
import { pollJob } from "./poll";

export interface SubmitResult {
  response: BookmarkResponseJson;
  jobDone: Promise<JobJson | null> | null;
}

export interface AppHandle {
  analyze(url: string, resources?: boolean): Promise<void>;
  openBookmarkDialog(url: string): Promise<void>;
  submitBookmark(body: BookmarkBody): Promise<SubmitResult>;
  refreshTree(): Promise<void>;
}

export function mountApp(root: HTMLElement): AppHandle {
  root.innerHTML = `
    <header class="app-header"><h1>Mementoscope</h1></header>
    <main class="app-main">
      <section class="analyze-section">
        <form id="analyze-form">
          <input id="analyze-url" name="url" type="url" required
                 placeholder="https://example.com/" />
          <label class="resources-toggle">
            <input id="analyze-resources" type="checkbox" /> resource datetimes
          </label>
          <button type="submit">Analyze</button>
        </form>
        <p id="error-box" class="error-box" hidden></p>
        <div id="cards" class="cards"></div>
      </section>
      <aside class="side-panel">
        <h2>Bookmarks</h2>
        <div id="tree-container"></div>
        <h2>Jobs</h2>
        <ul id="job-list"></ul>
      </aside>
    </main>
    <div id="dialog-container"></div>
  `;

  const urlInput = root.querySelector<HTMLInputElement>("#analyze-url")!;
  const resourcesToggle =
    root.querySelector<HTMLInputElement>("#analyze-resources")!;
  const errorBox = root.querySelector<HTMLElement>("#error-box")!;
  const cards = root.querySelector<HTMLElement>("#cards")!;
  const treeContainer = root.querySelector<HTMLElement>("#tree-container")!;
  const jobList = root.querySelector<HTMLElement>("#job-list")!;
  const dialogContainer = root.querySelector<HTMLElement>("#dialog-container")!;

  let archiveChoices: ArchiveOption[] | null = null;

  function showError(error: unknown): void {
    errorBox.hidden = false;
    errorBox.textContent =
      error instanceof ApiError
        ? `${error.code}: ${error.message}`
        : String(error);
  }

  function clearError(): void {
    errorBox.hidden = true;
    errorBox.textContent = "";
  }

  function upsertJobLine(job: JobJson): void {
    let line = jobList.querySelector<HTMLElement>(
      `[data-job-id="${job.id}"]`,
    );
    if (!line) {
      line = el("li", "job-line");
      line.dataset.jobId = job.id;
      jobList.append(line);
    }
    const extra = job.result_url ?? job.error ?? "";
    line.textContent = `${job.id} ${job.status}${extra ? " " + extra : ""}`;
  }

  async function refreshTree(): Promise<void> {
    const doc = await api.bookmarks();
    treeContainer.replaceChildren(renderBookmarkTree(doc));
  }

  async function analyze(url: string, resources = false): Promise<void> {
    clearError();
    try {
      const report = await api.analyze({ url, resources });
      cards.prepend(renderAnalyzeCard(report, { onStar: openBookmarkDialog }));
    } catch (error) {
      showError(error);
    }
  }

  async function submitBookmark(body: BookmarkBody): Promise<SubmitResult> {
    const response = await api.addBookmark(body);
    await refreshTree();
    let jobDone: Promise<JobJson | null> | null = null;
    if (response.job_id) {
      jobDone = pollJob(response.job_id, upsertJobLine)
        .then(async (job) => {
          await refreshTree();
          return job;
        })
        .catch((error) => {
          showError(error);
          return null;
        });
    }
    return { response, jobDone };
  }

  async function openBookmarkDialog(url: string): Promise<void> {
    if (archiveChoices === null) {
      const catalogue: { archives: ArchiveInfoJson[] } = await api.archives();
      archiveChoices = archiveOptions(catalogue.archives);
    }
    const dialog = renderBookmarkDialog(url, archiveChoices, {
      onDone: (body) => {
        dialogContainer.replaceChildren();
        void submitBookmark(body).catch(showError);
      },
      onCancel: () => dialogContainer.replaceChildren(),
    });
    dialogContainer.replaceChildren(dialog);
  }

  root
    .querySelector<HTMLFormElement>("#analyze-form")!
    .addEventListener("submit", (event) => {
      event.preventDefault();
      void analyze(urlInput.value, resourcesToggle.checked);
    });

  void refreshTree().catch(showError);

  return { analyze, openBookmarkDialog, submitBookmark, refreshTree };
}
