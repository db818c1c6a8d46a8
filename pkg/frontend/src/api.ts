/**
 * Typed client for the engine's HTTP API.
 *
 * Evaluate calls are serialized: at most one is in flight, and starting
 * a new one aborts its predecessor (slider drags produce bursts and only
 * the newest result matters). Sweep and compare retry once on a network
 * failure before giving up.
 */

import type {
  CompareResponse,
  EvaluateRequest,
  EvaluateResponse,
  SweepRequest,
  SweepResponse,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** A non-2xx response, carrying the server's {error, path} body. */
export class ApiRequestError extends Error {
  readonly status: number;
  readonly path: string | null;

  constructor(status: number, message: string, path: string | null) {
    super(message);
    this.name = "ApiRequestError";
    this.status = status;
    this.path = path;
  }
}

/** The request was superseded by a newer one; callers should go quiet. */
export class SupersededError extends Error {
  constructor() {
    super("superseded by a newer request");
    this.name = "SupersededError";
  }
}

async function raiseForStatus(resp: Response): Promise<void> {
  if (resp.ok) return;
  let message = `request failed with status ${resp.status}`;
  let path: string | null = null;
  try {
    const body = (await resp.json()) as { error?: string; path?: string | null };
    if (typeof body.error === "string") message = body.error;
    path = body.path ?? null;
  } catch {
    // body was not the documented shape; keep the generic message
  }
  throw new ApiRequestError(resp.status, message, path);
}

export class ApiClient {
  private readonly baseUrl: string;
  private readonly fetchFn: FetchLike;
  private inflightEvaluate: AbortController | null = null;

  constructor(baseUrl = "", fetchFn?: FetchLike) {
    this.baseUrl = baseUrl;
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  private async post<T>(route: string, body: unknown, signal?: AbortSignal): Promise<T> {
    const resp = await this.fetchFn(`${this.baseUrl}${route}`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
    await raiseForStatus(resp);
    return (await resp.json()) as T;
  }

  /** Evaluate, cancelling any evaluate still in flight. */
  async evaluate(request: EvaluateRequest): Promise<EvaluateResponse> {
    this.inflightEvaluate?.abort();
    const controller = new AbortController();
    this.inflightEvaluate = controller;
    try {
      return await this.post<EvaluateResponse>("/api/evaluate", request, controller.signal);
    } catch (err) {
      if (controller.signal.aborted) throw new SupersededError();
      throw err;
    } finally {
      if (this.inflightEvaluate === controller) this.inflightEvaluate = null;
    }
  }

  private async postWithRetry<T>(route: string, body: unknown): Promise<T> {
    try {
      return await this.post<T>(route, body);
    } catch (err) {
      if (err instanceof ApiRequestError) throw err; // the server answered; retrying is pointless
      return await this.post<T>(route, body);
    }
  }

  async sweep(request: SweepRequest): Promise<SweepResponse> {
    return this.postWithRetry<SweepResponse>("/api/sweep", request);
  }

  async compare(request: EvaluateRequest): Promise<CompareResponse> {
    return this.postWithRetry<CompareResponse>("/api/compare", request);
  }

  async health(): Promise<boolean> {
    try {
      const resp = await this.fetchFn(`${this.baseUrl}/healthz`);
      return resp.ok;
    } catch {
      return false;
    }
  }
}
