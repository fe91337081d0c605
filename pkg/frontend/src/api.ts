/**
 * Thin HTTP client for the session server.  One method per endpoint, no
 * retries, no caching: the server holds all session state and every call
 * returns the complete snapshot it produced.
 */

import {
  AppliedStep,
  HistoryStep,
  LoadRequest,
  PostResponse,
  ServerState,
  parseState,
} from "./types.js";

export type FetchLike = (
  input: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string },
) => Promise<{ status: number; text(): Promise<string> }>;

/** Error carrying the server's own message for 4xx replies. */
export class ApiError extends Error {
  readonly status: number;

  constructor(status: number, message: string) {
    super(message);
    this.status = status;
  }
}

/** The calls a controller needs; tests substitute recording fakes. */
export interface SessionApi {
  state(): Promise<ServerState>;
  load(request: LoadRequest): Promise<PostResponse>;
  mutate(vertex: number): Promise<PostResponse>;
  flip(diagonal: [number, number]): Promise<PostResponse>;
  twist(triangle: number, edge: [number, number]): Promise<PostResponse>;
  undo(): Promise<PostResponse>;
}

export class SessionClient implements SessionApi {
  private readonly base: string;
  private readonly fetchFn: FetchLike;

  constructor(base: string, fetchFn?: FetchLike) {
    this.base = base.replace(/\/+$/, "");
    this.fetchFn = fetchFn ?? (globalThis.fetch as unknown as FetchLike);
  }

  private async request(method: string, path: string, body?: unknown): Promise<string> {
    const init: Parameters<FetchLike>[1] = { method };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const resp = await this.fetchFn(this.base + path, init);
    const text = await resp.text();
    if (resp.status !== 200) {
      let message = text;
      try {
        const parsed = JSON.parse(text);
        if (parsed && typeof parsed.error === "string") {
          message = parsed.error;
        }
      } catch {
        // non-json error body, keep the raw text
      }
      throw new ApiError(resp.status, message);
    }
    return text;
  }

  /** GET /state, returning both the parsed snapshot and the exact bytes. */
  async rawState(): Promise<{ text: string; state: ServerState }> {
    const text = await this.request("GET", "/state");
    return { text, state: parseState(JSON.parse(text)) };
  }

  async state(): Promise<ServerState> {
    return (await this.rawState()).state;
  }

  async history(): Promise<HistoryStep[]> {
    const text = await this.request("GET", "/history");
    const parsed = JSON.parse(text);
    return parsed.steps as HistoryStep[];
  }

  private async post(path: string, body?: unknown): Promise<PostResponse> {
    const text = await this.request("POST", path, body);
    const parsed = JSON.parse(text);
    const out: PostResponse = {
      ok: true,
      state: parseState(parsed.state),
    };
    if (parsed.applied) {
      out.applied = parsed.applied as AppliedStep;
    }
    return out;
  }

  async load(request: LoadRequest): Promise<PostResponse> {
    return this.post("/load", request);
  }

  async mutate(vertex: number): Promise<PostResponse> {
    return this.post("/mutate", { vertex });
  }

  async flip(diagonal: [number, number]): Promise<PostResponse> {
    return this.post("/flip", { diagonal });
  }

  async twist(triangle: number, edge: [number, number]): Promise<PostResponse> {
    return this.post("/twist", { triangle, edge });
  }

  async undo(): Promise<PostResponse> {
    return this.post("/undo");
  }
}
