/** Shared mock backend and async scaffolding for the panel tests. */

import type { FetchLike } from "../src/api.js";
import type {
  AspectInfo,
  PlaceInfo,
  SummarizeRequest,
  SummaryEntry,
  SummaryResponse,
} from "../src/types.js";

export const PLACES: PlaceInfo[] = [
  {
    place: "taj-mahal",
    stats: {
      place: "taj-mahal",
      review_count: 35,
      female_count: 15,
      male_count: 18,
      unknown_count: 2,
      sentence_count: 104,
    },
  },
  {
    place: "petra",
    stats: {
      place: "petra",
      review_count: 35,
      female_count: 15,
      male_count: 18,
      unknown_count: 2,
      sentence_count: 103,
    },
  },
];

export const ASPECTS: AspectInfo[] = [
  "Attractions",
  "Access",
  "Activities",
  "Amenities",
  "Culture",
  "Cost",
  "Negatives",
  "Miscellaneous",
].map((label) => ({ label, terms: [label.toLowerCase()] }));

let entrySeq = 0;

export function entry(aspect: string, gender: "F" | "M" | "U", text: string): SummaryEntry {
  entrySeq += 1;
  return {
    sentence_id: `s${entrySeq}`,
    review_id: `r${entrySeq}`,
    text,
    gender,
    aspect,
    word_count: text.split(" ").length,
    scores: {
      readability_raw: 80,
      readability: 0.8,
      polarity: 4,
      sentiment_strength_raw: 2,
      sentiment_strength: 1,
      relevance_raw: 0.4,
      relevance: 0.4,
      combined: 0.32,
    },
  };
}

/** Response whose echo mirrors the request, like the real service. */
export function summaryFor(req: SummarizeRequest): SummaryResponse {
  const entries = [
    entry("Access", "F", "The queue moved quickly this morning."),
    entry("Access", "M", "Easy ride from the city."),
    entry("Cost", "M", "Tickets felt overpriced."),
  ];
  return {
    place: req.place,
    entries,
    total_words: 97,
    female_count: 1,
    male_count: 2,
    objective: 1.23,
    score_sum: 1.5,
    penalty_sum: 0.1,
    fairness_term: 0.17,
    solver_optimal: true,
    diagnostic: null,
    controls_echo: { ...req },
  };
}

export function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "content-type": "application/json" },
  });
}

export interface Deferred<T> {
  promise: Promise<T>;
  resolve: (value: T) => void;
  reject: (err: unknown) => void;
}

export function deferred<T>(): Deferred<T> {
  let resolve!: (value: T) => void;
  let reject!: (err: unknown) => void;
  const promise = new Promise<T>((res, rej) => {
    resolve = res;
    reject = rej;
  });
  return { promise, resolve, reject };
}

export type SummarizeHandler = (
  req: SummarizeRequest,
  signal: AbortSignal | undefined,
) => Promise<Response>;

/**
 * Fake /api/v1 backend. The summarize handler is swappable per test; by
 * default it echoes the request immediately. All summarize bodies are
 * recorded for call counting.
 */
export class MockBackend {
  summarizeCalls: SummarizeRequest[] = [];
  failCatalog = false;
  onSummarize: SummarizeHandler = (req) => Promise.resolve(jsonResponse(summaryFor(req)));

  readonly fetchFn: FetchLike = (input, init) => {
    if (input.endsWith("/api/v1/places")) {
      return this.failCatalog
        ? Promise.reject(new TypeError("fetch failed"))
        : Promise.resolve(jsonResponse(PLACES));
    }
    if (input.endsWith("/api/v1/aspects")) {
      return this.failCatalog
        ? Promise.reject(new TypeError("fetch failed"))
        : Promise.resolve(jsonResponse(ASPECTS));
    }
    if (input.endsWith("/api/v1/summarize")) {
      const req = JSON.parse(String(init?.body)) as SummarizeRequest;
      this.summarizeCalls.push(req);
      const signal = init?.signal ?? undefined;
      return this.onSummarize(req, signal);
    }
    return Promise.resolve(jsonResponse({ error: "not found" }, 404));
  };
}

/** Let queued microtasks (promise chains in the app) run to completion. */
export async function microtasks(rounds = 12): Promise<void> {
  for (let i = 0; i < rounds; i += 1) {
    await Promise.resolve();
  }
}
