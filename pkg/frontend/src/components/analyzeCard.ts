// One analysis result as a card: memento icon + badge, expandable capture
// date list, and the memento info popup with the "About this memento"
// panel. Every string shown comes straight from the report JSON.

import type { AnalysisReportJson } from "../api";
import { el } from "../dom";

export interface AnalyzeCardHandlers {
  onStar?: (url: string) => void;
}

export const MEMENTO_ICON = "◷";

export function renderAnalyzeCard(
  report: AnalysisReportJson,
  handlers: AnalyzeCardHandlers = {},
): HTMLElement {
  const card = el("article", "card analyze-card");
  card.dataset.reportId = report.id;

  const header = el("header", "card-header");
  header.append(el("span", "card-url", report.url));
  const star = el("button", "star-button", "☆");
  star.type = "button";
  star.title = "Bookmark this page";
  star.addEventListener("click", () => handlers.onStar?.(report.url));
  header.append(star);
  card.append(header);

  const status = el("div", "card-status");
  const popup = renderPopup(report);
  if (report.badge !== null) {
    const icon = el("button", "memento-icon", MEMENTO_ICON);
    icon.type = "button";
    icon.title = "Memento info";
    icon.setAttribute("aria-expanded", "false");
    icon.addEventListener("click", () => {
      popup.hidden = !popup.hidden;
      icon.setAttribute("aria-expanded", String(!popup.hidden));
    });
    status.append(icon, el("span", "badge-text", report.badge));
  }
  status.append(el("span", "card-kind", report.classification.kind));
  status.append(el("span", "card-fetched", report.fetched_at));
  card.append(status);

  const dates = report.classification.memento_dates;
  if (dates.length > 0) {
    const details = el("details", "date-list");
    details.append(el("summary", undefined, `${dates.length} capture dates`));
    const list = el("ul");
    for (const date of dates) {
      list.append(el("li", "capture-date", date.raw));
    }
    details.append(list);
    card.append(details);
  }

  card.append(popup);
  return card;
}

function renderPopup(report: AnalysisReportJson): HTMLElement {
  const popup = el("div", "memento-popup");
  popup.hidden = true;

  const lines = el("ul", "popup-lines");
  for (const line of report.popup) {
    lines.append(el("li", "popup-line", line));
  }
  popup.append(lines);

  const about = el("section", "about-memento");
  about.append(el("h4", undefined, "About this memento"));
  const resources = report.resource_datetimes;
  if (resources && resources.length > 0) {
    const rows = el("ul", "resource-rows");
    for (const resource of resources) {
      const row = el("li", "resource-row");
      row.append(el("span", "resource-url", resource.url));
      row.append(
        el(
          "span",
          "resource-datetime",
          resource.datetime ? resource.datetime.raw : "no datetime",
        ),
      );
      rows.append(row);
    }
    about.append(rows);
  } else {
    about.append(el("p", "empty-state", "No archived resources recorded."));
  }
  popup.append(about);
  return popup;
}
