/** Shared scaffolding for UI tests. */

import { ApiClient, type FetchLike } from "../src/api.js";
import { WhatIfApp, type AppOptions } from "../src/app.js";
import type {
  CompareResponse,
  EvaluateResponse,
  SweepResponse,
} from "../src/types.js";

export interface StubBehavior {
  evaluate?: EvaluateResponse | (() => EvaluateResponse);
  sweep?: SweepResponse;
  compare?: CompareResponse | { status: number; error: string; path?: string | null };
  evaluateStatus?: { status: number; error: string; path?: string | null };
}

export interface StubRecord {
  calls: Array<{ route: string; body: unknown; signal?: AbortSignal | null }>;
}

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

/** A fetch stub serving canned API responses and recording every call. */
export function stubFetch(behavior: StubBehavior): { fetchFn: FetchLike; record: StubRecord } {
  const record: StubRecord = { calls: [] };
  const fetchFn: FetchLike = async (input, init) => {
    const route = input.replace(/^https?:\/\/[^/]+/, "");
    const body = init?.body ? JSON.parse(String(init.body)) : undefined;
    record.calls.push({ route, body, signal: init?.signal ?? null });
    if (init?.signal?.aborted) {
      throw new DOMException("aborted", "AbortError");
    }
    if (route === "/healthz") return jsonResponse({ status: "ok" });
    if (route === "/api/evaluate") {
      if (behavior.evaluateStatus) {
        const { status, error, path } = behavior.evaluateStatus;
        return jsonResponse({ error, path: path ?? null }, status);
      }
      const payload =
        typeof behavior.evaluate === "function" ? behavior.evaluate() : behavior.evaluate;
      return jsonResponse(payload ?? { belief: 0, trace: [], warnings: [] });
    }
    if (route === "/api/sweep") {
      return jsonResponse(behavior.sweep ?? { rows: [] });
    }
    if (route === "/api/compare") {
      const compare = behavior.compare;
      if (compare && "status" in compare) {
        return jsonResponse({ error: compare.error, path: compare.path ?? null }, compare.status);
      }
      return jsonResponse(compare ?? { rows: [] });
    }
    return jsonResponse({ error: "not found", path: null }, 404);
  };
  return { fetchFn, record };
}

export function mountApp(
  fetchFn: FetchLike,
  options: AppOptions = { debounceMs: 0 },
  baseUrl = "",
): { app: WhatIfApp; root: HTMLElement } {
  document.body.innerHTML = '<div id="app"></div>';
  const root = document.getElementById("app") as HTMLElement;
  const app = new WhatIfApp(root, new ApiClient(baseUrl, fetchFn), options);
  return { app, root };
}

export function texts(root: ParentNode, selector: string): string[] {
  return Array.from(root.querySelectorAll(selector)).map((n) => n.textContent ?? "");
}

/** Poll until `probe` returns a truthy value or the timeout elapses. */
export async function waitFor<T>(
  probe: () => T | null | undefined | false,
  timeoutMs = 5_000,
  intervalMs = 5,
): Promise<T> {
  const deadline = Date.now() + timeoutMs;
  for (;;) {
    const result = probe();
    if (result) return result;
    if (Date.now() > deadline) throw new Error("waitFor timed out");
    await new Promise((resolve) => setTimeout(resolve, intervalMs));
  }
}

export const SENTINEL_EVALUATE: EvaluateResponse = {
  belief: 0.123456789,
  trace: [
    { stage: "supportive", inputs: [], belief_before: 0.987654321, belief_after: 0.111111111 },
    { stage: "adverse", inputs: [], belief_before: 0.111111111, belief_after: 0.222222222 },
    { stage: "sufficient", inputs: [], belief_before: 0.222222222, belief_after: 0.333333333 },
    { stage: "contrary", inputs: [], belief_before: 0.333333333, belief_after: 0.444444444 },
    { stage: "necessary", inputs: [], belief_before: 0.444444444, belief_after: 0.555555555 },
  ],
  warnings: [],
};
