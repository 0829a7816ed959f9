/** Explorer store: one place that owns the ViewState, talks to the API,
 * and discards stale responses.  Renderers subscribe and read snapshots;
 * they never fetch on their own. */

import { ApiClient, ApiError } from "./api.js";
import type { LayerQuery } from "./api.js";
import type { Selection, ViewState } from "./state.js";
import { DEFAULT_STATE } from "./state.js";
import type {
  LayerEdge,
  LayerName,
  LayersResponse,
  MembersResponse,
  QuotesResponse,
  TablesResponse,
} from "./types.js";

export interface StoreData {
  members: MembersResponse | null;
  layers: LayersResponse | null;
  tables: TablesResponse | null;
  quotes: QuotesResponse | null;
  error: { code: string; message: string } | null;
}

export type Listener = () => void;

const QUOTE_PAGE = 20;
const TABLE_K = 10;

export class ExplorerStore {
  state: ViewState;
  data: StoreData = {
    members: null,
    layers: null,
    tables: null,
    quotes: null,
    error: null,
  };

  private listeners: Listener[] = [];
  private seq = { layers: 0, tables: 0, quotes: 0 };

  constructor(
    private readonly api: ApiClient,
    initial: ViewState = { ...DEFAULT_STATE },
  ) {
    this.state = { ...initial };
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private notify(): void {
    for (const listener of this.listeners) {
      listener();
    }
  }

  private layerQuery(): LayerQuery {
    return {
      a: this.state.groupA,
      b: this.state.groupB,
      min_a: this.state.minMembersA,
      min_b: this.state.minMembersB,
      min_total: this.state.minTotal,
      specific_min: this.state.specificMin,
    };
  }

  /** Edges of the currently selected layer, from the last response. */
  layerEdges(): LayerEdge[] {
    const edges = this.data.layers?.edges ?? [];
    return edges.filter((e) => e.layer === this.state.layer);
  }

  private selectionVisible(sel: Selection, edges: LayerEdge[]): boolean {
    if (sel.kind === "association") {
      return edges.some(
        (e) =>
          (e.a === sel.a && e.b === sel.b) || (e.a === sel.b && e.b === sel.a),
      );
    }
    return edges.some((e) => e.a === sel.a || e.b === sel.a);
  }

  async refreshMembers(): Promise<void> {
    try {
      this.data.members = await this.api.members();
      this.notify();
    } catch (error) {
      this.fail(error);
    }
  }

  async refreshLayers(): Promise<void> {
    const ticket = ++this.seq.layers;
    try {
      const body = await this.api.layers(this.layerQuery());
      if (ticket !== this.seq.layers) {
        return; // a newer request is in flight or already landed
      }
      this.data.layers = body;
      this.data.error = null;
      const sel = this.state.selection;
      if (sel && !this.selectionVisible(sel, this.layerEdges())) {
        this.state.selection = null;
        this.state.quoteOffset = 0;
        this.data.quotes = null;
      }
      this.notify();
    } catch (error) {
      if (ticket === this.seq.layers) {
        this.fail(error);
      }
    }
  }

  async refreshTables(): Promise<void> {
    const ticket = ++this.seq.tables;
    try {
      const body = await this.api.tables(
        this.state.layer,
        TABLE_K,
        this.layerQuery(),
      );
      if (ticket !== this.seq.tables) {
        return;
      }
      this.data.tables = body;
      this.notify();
    } catch (error) {
      if (ticket === this.seq.tables) {
        this.fail(error);
      }
    }
  }

  async refreshQuotes(): Promise<void> {
    const sel = this.state.selection;
    const ticket = ++this.seq.quotes;
    if (!sel) {
      this.data.quotes = null;
      this.notify();
      return;
    }
    try {
      const body = await this.api.quotes({
        ...(sel.kind === "concept"
          ? { concept: sel.a }
          : { a: sel.a, b: sel.b ?? "" }),
        context: 1,
        offset: this.state.quoteOffset,
        limit: QUOTE_PAGE,
      });
      if (ticket !== this.seq.quotes) {
        return;
      }
      this.data.quotes = body;
      this.notify();
    } catch (error) {
      if (ticket === this.seq.quotes) {
        this.fail(error);
      }
    }
  }

  private fail(error: unknown): void {
    this.data.error =
      error instanceof ApiError
        ? { code: error.code, message: error.message }
        : { code: "network_error", message: String(error) };
    this.notify();
  }

  /** Initial load: roster plus the map for the URL-restored state. */
  async start(): Promise<void> {
    await Promise.all([
      this.refreshMembers(),
      this.refreshLayers(),
      this.refreshTables(),
      this.state.selection ? this.refreshQuotes() : Promise.resolve(),
    ]);
  }

  // Each mutator triggers exactly the refetches its change invalidates.

  setMinTotal(value: number): Promise<void> {
    this.state.minTotal = value;
    this.notify();
    return Promise.all([this.refreshLayers(), this.refreshTables()]).then(
      () => undefined,
    );
  }

  setSpecificMin(value: number | null): Promise<void> {
    this.state.specificMin = value;
    this.notify();
    return Promise.all([this.refreshLayers(), this.refreshTables()]).then(
      () => undefined,
    );
  }

  setMinMembers(which: "a" | "b", value: number): Promise<void> {
    if (which === "a") {
      this.state.minMembersA = value;
    } else {
      this.state.minMembersB = value;
    }
    this.notify();
    return Promise.all([this.refreshLayers(), this.refreshTables()]).then(
      () => undefined,
    );
  }

  setGroups(a: string | null, b: string | null): Promise<void> {
    this.state.groupA = a;
    this.state.groupB = b;
    this.notify();
    return Promise.all([this.refreshLayers(), this.refreshTables()]).then(
      () => undefined,
    );
  }

  setLayer(layer: LayerName): Promise<void> {
    this.state.layer = layer;
    const sel = this.state.selection;
    if (sel && !this.selectionVisible(sel, this.layerEdges())) {
      this.state.selection = null;
      this.state.quoteOffset = 0;
      this.data.quotes = null;
    }
    this.notify();
    return this.refreshTables();
  }

  select(selection: Selection | null): Promise<void> {
    this.state.selection = selection;
    this.state.quoteOffset = 0;
    this.notify();
    return this.refreshQuotes();
  }

  pageQuotes(direction: 1 | -1): Promise<void> {
    const total = this.data.quotes?.total ?? 0;
    const next = this.state.quoteOffset + direction * QUOTE_PAGE;
    if (next < 0) {
      this.state.quoteOffset = 0;
    } else if (next < total) {
      this.state.quoteOffset = next;
    } // past the end: stay on the last page
    this.notify();
    return this.refreshQuotes();
  }
}

export { QUOTE_PAGE, TABLE_K };
