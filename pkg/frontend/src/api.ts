/** Thin typed client for the /api/v1 endpoints; no analysis happens here. */

import type {
  ApiErrorBody,
  CommunitiesResponse,
  LayersResponse,
  MembersResponse,
  NetworkResponse,
  QuotesResponse,
  TablesResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type QueryParams = Record<
  string,
  string | number | boolean | null | undefined
>;

export function buildQuery(params: QueryParams): string {
  const search = new URLSearchParams();
  for (const [key, value] of Object.entries(params)) {
    if (value !== undefined && value !== null) {
      search.set(key, String(value));
    }
  }
  const text = search.toString();
  return text ? `?${text}` : "";
}

export type FetchLike = (url: string) => Promise<{
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}>;

export interface LayerQuery {
  a?: string | null;
  b?: string | null;
  min_a?: number;
  min_b?: number;
  min_total?: number | null;
  specific_min?: number | null;
  include_edges?: boolean;
}

export interface QuoteQuery {
  a?: string;
  b?: string;
  concept?: string;
  scope?: string | null;
  context?: number;
  offset?: number;
  limit?: number;
}

export class ApiClient {
  constructor(
    private readonly base: string = "/api/v1",
    private readonly fetchImpl: FetchLike = (url) => fetch(url),
  ) {}

  private async get<T>(path: string, params: QueryParams = {}): Promise<T> {
    const response = await this.fetchImpl(
      `${this.base}${path}${buildQuery(params)}`,
    );
    const body = (await response.json()) as unknown;
    if (!response.ok) {
      const err = body as Partial<ApiErrorBody>;
      throw new ApiError(
        response.status,
        err.code ?? "error",
        err.message ?? `request failed (${response.status})`,
      );
    }
    return body as T;
  }

  members(): Promise<MembersResponse> {
    return this.get("/members");
  }

  network(member: string, full = false): Promise<NetworkResponse> {
    return this.get(`/networks/${encodeURIComponent(member)}`, { full });
  }

  layers(query: LayerQuery = {}): Promise<LayersResponse> {
    return this.get("/layers", { include_edges: true, ...query });
  }

  tables(layer: string, k: number, query: LayerQuery = {}): Promise<TablesResponse> {
    return this.get("/tables", { layer, k, ...query });
  }

  quotes(query: QuoteQuery): Promise<QuotesResponse> {
    return this.get("/quotes", { ...query });
  }

  communities(k?: number | null, weighted = false): Promise<CommunitiesResponse> {
    return this.get("/communities", { k, weighted });
  }

  graphmlUrl(layer: string, query: LayerQuery = {}): string {
    return `${this.base}/export/graphml${buildQuery({ layer, ...query })}`;
  }
}
