/** DOM rendering. Everything shown is sourced from the response payload. */

import type { SummaryEntry, SummaryResponse } from "./types.js";

export interface AspectGroup {
  aspect: string;
  entries: SummaryEntry[];
}

/** Entries arrive grouped; rebuild the groups for header rendering. */
export function groupEntries(entries: SummaryEntry[]): AspectGroup[] {
  const groups: AspectGroup[] = [];
  for (const entry of entries) {
    const last = groups[groups.length - 1];
    if (last !== undefined && last.aspect === entry.aspect) {
      last.entries.push(entry);
    } else {
      groups.push({ aspect: entry.aspect, entries: [entry] });
    }
  }
  return groups;
}

export function footerText(resp: SummaryResponse): string {
  return `${resp.total_words} / ${resp.controls_echo.length_words} words`;
}

export function genderFooterText(resp: SummaryResponse): string {
  const fp = resp.controls_echo.female_ratio;
  return `${resp.female_count} female / ${resp.male_count} male (requested ratio ${fp})`;
}

export function parityText(resp: SummaryResponse): string {
  if (resp.female_count === resp.male_count && resp.controls_echo.female_ratio === 0.5) {
    return "balanced";
  }
  return resp.female_count > resp.male_count ? "leaning female" : "leaning male";
}

const GENDER_NAMES: Record<string, string> = { F: "female", M: "male", U: "unknown" };

export function renderSummary(root: HTMLElement, resp: SummaryResponse): void {
  root.textContent = "";
  if (resp.diagnostic) {
    const note = el("p", "diagnostic", resp.diagnostic);
    root.appendChild(note);
  }
  for (const group of groupEntries(resp.entries)) {
    const header = el("h3", "aspect-header", group.aspect);
    root.appendChild(header);
    const list = document.createElement("ul");
    list.className = "sentence-list";
    for (const entry of group.entries) {
      const item = document.createElement("li");
      item.className = "sentence";
      const gender = el("span", `badge gender gender-${entry.gender}`, entry.gender);
      gender.title = GENDER_NAMES[entry.gender] ?? entry.gender;
      const score = el("span", "badge score", entry.scores.combined.toFixed(3));
      item.append(gender, score, el("span", "text", entry.text));
      list.appendChild(item);
    }
    root.appendChild(list);
  }
  const footer = el("footer", "summary-footer");
  footer.append(
    el("span", "words", footerText(resp)),
    el("span", "genders", genderFooterText(resp)),
    el("span", "parity", parityText(resp)),
  );
  if (!resp.solver_optimal) {
    footer.appendChild(el("span", "heuristic-note", "heuristic selection"));
  }
  root.appendChild(footer);
}

export function renderBanner(root: HTMLElement, message: string, onRetry: () => void): void {
  root.textContent = "";
  const banner = el("div", "banner error-banner");
  banner.appendChild(el("span", "message", message));
  const retry = document.createElement("button");
  retry.className = "retry";
  retry.textContent = "Retry";
  retry.addEventListener("click", onRetry);
  banner.appendChild(retry);
  root.appendChild(banner);
}

export function renderFieldErrors(root: HTMLElement, fields: Record<string, string>): void {
  root.textContent = "";
  for (const [field, message] of Object.entries(fields)) {
    root.appendChild(el("p", "field-error", `${field}: ${message}`));
  }
}

export function renderServerError(root: HTMLElement, requestId: string | undefined): void {
  root.textContent = "";
  const panel = el("div", "error-panel", "The summarizer failed on the server.");
  if (requestId) {
    panel.appendChild(el("p", "request-id", `request id: ${requestId}`));
  }
  root.appendChild(panel);
}

function el(tag: string, className: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}
