/** Fixture loading and a recording fetch double.
 *
 * The JSON files under fixtures/ are verbatim HTTP responses captured
 * from a served demo bundle (see capture-fixtures.sh), so every expected
 * number in these tests is an API number, not a hand computation. */

import { readFileSync } from "node:fs";
import { join, resolve } from "node:path";

import type { FetchLike } from "../src/api.js";

// vitest runs with the package root as cwd
const FIXTURE_DIR = resolve(process.cwd(), "test", "fixtures");

export function loadFixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(FIXTURE_DIR, name), "utf-8")) as T;
}

export interface RecordedCall {
  path: string;
  params: URLSearchParams;
}

export type Route = (
  path: string,
  params: URLSearchParams,
) => { status?: number; body: unknown } | undefined;

export interface RecordingFetch {
  fetch: FetchLike;
  calls: RecordedCall[];
  /** calls whose path ends with the given suffix */
  count(suffix: string): number;
  reset(): void;
}

export function recordingFetch(route: Route): RecordingFetch {
  const calls: RecordedCall[] = [];
  const fetchImpl: FetchLike = (url) => {
    const parsed = new URL(url, "http://fixture.test");
    const call = { path: parsed.pathname, params: parsed.searchParams };
    calls.push(call);
    const handled = route(call.path, call.params);
    if (!handled) {
      return Promise.resolve({
        ok: false,
        status: 404,
        json: () =>
          Promise.resolve({ code: "not_found", message: call.path }),
      });
    }
    const status = handled.status ?? 200;
    return Promise.resolve({
      ok: status < 400,
      status,
      json: () => Promise.resolve(handled.body),
    });
  };
  return {
    fetch: fetchImpl,
    calls,
    count: (suffix) => calls.filter((c) => c.path.endsWith(suffix)).length,
    reset: () => {
      calls.length = 0;
    },
  };
}

/** Standard demo-bundle routing: layers vary by min_total, quotes by
 * association, everything else is the captured default. */
export function demoRoute(): Route {
  const layersByMinTotal: Record<string, unknown> = {
    "": loadFixture("layers-default.json"),
    "1": loadFixture("layers-default.json"),
    "3": loadFixture("layers-min-total-3.json"),
    "5": loadFixture("layers-min-total-5.json"),
  };
  const quotesByPair: Record<string, unknown> = {
    "honest,work": loadFixture("quotes-honest-work.json"),
    "galleri,small": loadFixture("quotes-gallery-small.json"),
    "искусств,современ": loadFixture("quotes-ru.json"),
  };
  return (path, params) => {
    if (path.endsWith("/members")) {
      return { body: loadFixture("members.json") };
    }
    if (path.endsWith("/layers")) {
      const body = layersByMinTotal[params.get("min_total") ?? ""];
      return body ? { body } : undefined;
    }
    if (path.endsWith("/tables")) {
      return { body: loadFixture("tables-common.json") };
    }
    if (path.endsWith("/quotes")) {
      const concept = params.get("concept");
      const parts = [params.get("a"), params.get("b")]
        .filter((p): p is string => p !== null)
        .sort();
      const body = quotesByPair[concept ?? parts.join(",")];
      if (body) {
        return { body };
      }
      // selections without a captured fixture get an empty result set
      return {
        body: {
          matched: concept ?? { a: parts[0] ?? "", b: parts[1] ?? "" },
          total: 0,
          offset: Number(params.get("offset") ?? 0),
          limit: Number(params.get("limit") ?? 50),
          hits: [],
        },
      };
    }
    if (path.endsWith("/communities")) {
      return { body: loadFixture("communities.json") };
    }
    if (path.endsWith("/networks/CA")) {
      return { body: loadFixture("network-ca.json") };
    }
    if (path.includes("/networks/")) {
      return { status: 404, body: loadFixture("error-unknown-member.json") };
    }
    return undefined;
  };
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
