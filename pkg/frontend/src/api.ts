/** Thin client for the /api/v1 endpoints. fetch is injectable for tests. */

import type {
  ApiErrorPayload,
  AspectInfo,
  PlaceInfo,
  SummarizeRequest,
  SummaryResponse,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiRequestError extends Error {
  constructor(
    readonly status: number,
    readonly payload: ApiErrorPayload,
  ) {
    super(payload.error ?? `request failed with status ${status}`);
    this.name = "ApiRequestError";
  }
}

export class ApiClient {
  private readonly fetchFn: FetchLike;

  constructor(fetchFn?: FetchLike, private readonly base: string = "") {
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  async places(): Promise<PlaceInfo[]> {
    return this.get<PlaceInfo[]>("/api/v1/places");
  }

  async aspects(): Promise<AspectInfo[]> {
    return this.get<AspectInfo[]>("/api/v1/aspects");
  }

  async summarize(request: SummarizeRequest, signal?: AbortSignal): Promise<SummaryResponse> {
    const resp = await this.fetchFn(this.base + "/api/v1/summarize", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(request),
      signal,
    });
    if (!resp.ok) {
      throw new ApiRequestError(resp.status, await parseErrorPayload(resp));
    }
    return (await resp.json()) as SummaryResponse;
  }

  private async get<T>(path: string): Promise<T> {
    const resp = await this.fetchFn(this.base + path);
    if (!resp.ok) {
      throw new ApiRequestError(resp.status, await parseErrorPayload(resp));
    }
    return (await resp.json()) as T;
  }
}

async function parseErrorPayload(resp: Response): Promise<ApiErrorPayload> {
  try {
    return (await resp.json()) as ApiErrorPayload;
  } catch {
    return { error: `HTTP ${resp.status}` };
  }
}
